#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mdcalc {

enum class ErrorKind {
  DegreeMismatch,
  BadVariableIndex,
  ContextMismatch,
  FloorViolation,
  NotInvertible,
  InsufficientFloor,
  NotSelfAdjoint,
  BadPrincipalSymbol,
  NonComposable,
  BudgetExceeded,
  SyntaxError,
  UnknownVariable,
  SchemaError,
  AxiomViolation,
  UnknownSuite,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the engine carries a kind so callers (the CLI in
// particular) can map it to an exit status without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(int line, int column, const std::string& what)
      : Error(ErrorKind::SyntaxError,
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::uint64_t search_size, std::uint64_t budget)
      : Error(ErrorKind::BudgetExceeded, "search space of " + std::to_string(search_size) +
                                             " candidates exceeds budget " + std::to_string(budget)),
        search_size_(search_size),
        budget_(budget) {}

  std::uint64_t search_size() const noexcept { return search_size_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t search_size_;
  std::uint64_t budget_;
};

}  // namespace mdcalc
