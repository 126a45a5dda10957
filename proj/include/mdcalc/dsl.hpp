#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "mdcalc/operator.hpp"

namespace mdcalc::dsl {

struct Expr {
  enum class Kind { Number, ImaginaryUnit, Variable, Negate, Add, Subtract, Multiply, Divide,
                    Power, Compose, Call };
  Kind kind = Kind::Number;
  std::string text;  // digits for Number, name for Call
  int index = 0;     // variable index, 1-based
  bool is_xi = false;
  int exponent = 0;  // Power
  std::vector<std::shared_ptr<const Expr>> args;
  int line = 1;
  int column = 1;

  /// Structural equality; positions are ignored.
  bool same_as(const Expr& other) const;
};

using ExprPtr = std::shared_ptr<const Expr>;

/// Parses an operator expression. Throws SyntaxError with the position of
/// the offending token and UnknownVariable for names other than x<k>, xi<k>
/// (k <= vars when vars > 0), `i` and the built-ins.
ExprPtr parse_operator(std::string_view text, int vars = 0);

/// Text that parses back to the same tree, with the fewest parentheses.
std::string render(const Expr& expr);

struct EvalConfig {
  int vars = 1;
  int floor = -10;
};

/// Evaluates with `*` as the pointwise symbol product and `o` as operator
/// composition. inv, sqrt, unitarize and ad are computed to cfg.floor,
/// which is also the floor used for non-terminating exact products.
/// Module errors are rethrown with the failing sub-expression attached.
Operator evaluate(const Expr& expr, const EvalConfig& cfg);
Operator evaluate(std::string_view text, const EvalConfig& cfg);

/// Names accepted as built-in calls, with their arity.
struct Builtin {
  std::string_view name;
  int arity;
};
const std::vector<Builtin>& builtins();

}  // namespace mdcalc::dsl
