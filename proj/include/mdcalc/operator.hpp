#pragma once

#include <map>
#include <optional>
#include <string>

#include "mdcalc/scalar.hpp"
#include "mdcalc/symbol.hpp"

namespace mdcalc {

/// Chart dimension plus the floor used when an exact computation would
/// otherwise produce an infinite series (e.g. xi^-1 o x^-1).
struct TruncationContext {
  int nvars = 1;
  int default_floor = -12;

  friend bool operator==(const TruncationContext&, const TruncationContext&) = default;
};

/// A truncated total symbol sum_{floor <= j <= top} p_j.
///
/// Degrees in [floor, top] are reliable: a missing component there is a
/// known zero. Below the floor nothing is known. An exact operator has no
/// floor and equals its finite stored sum identically.
class Operator {
 public:
  using Components = std::map<int, HomogeneousSymbol>;

  /// The exact zero operator.
  explicit Operator(TruncationContext ctx, int top = 0);

  /// Components outside [floor, top] are rejected, zero components dropped.
  static Operator from_components(TruncationContext ctx, int top, std::optional<int> floor,
                                  const Components& components);
  static Operator constant(TruncationContext ctx, const Scalar& c);
  static Operator one(TruncationContext ctx) { return constant(ctx, Scalar(1)); }
  /// Exact operator whose total symbol is the given homogeneous symbol.
  static Operator from_symbol(TruncationContext ctx, const HomogeneousSymbol& s);
  /// Multiplication by x_i / the derivation d/dx_i (symbol xi_i); 1-based.
  static Operator x(TruncationContext ctx, int i);
  static Operator xi(TruncationContext ctx, int i);

  const TruncationContext& context() const { return ctx_; }
  int nvars() const { return ctx_.nvars; }
  int top() const { return top_; }
  std::optional<int> floor() const { return floor_; }
  bool is_exact() const { return !floor_.has_value(); }
  const Components& components() const { return components_; }

  /// Stored component of the given degree (zero symbol if absent), without
  /// any reliability check. Use symbol_at() for the checked accessor.
  HomogeneousSymbol component(int degree) const;

  /// Raises the floor to `floor` (no-op if already higher), discarding
  /// components below it. Exact operators become truncated.
  Operator truncated(int floor) const;
  /// Lowers top to the highest nonzero component, when there is one.
  Operator trimmed() const;

  Operator& operator+=(const Operator& o);
  Operator& operator-=(const Operator& o);
  Operator& operator*=(const Scalar& c);
  friend Operator operator+(Operator a, const Operator& b) { return a += b; }
  friend Operator operator-(Operator a, const Operator& b) { return a -= b; }
  friend Operator operator*(Operator a, const Scalar& c) { return a *= c; }
  Operator operator-() const;

  /// Structural equality: context, top, floor and components.
  friend bool operator==(const Operator&, const Operator&) = default;

  /// Canonical text of the stored sum, highest degree first; `0` if empty.
  std::string to_string() const;

 private:
  TruncationContext ctx_;
  int top_ = 0;
  std::optional<int> floor_;
  Components components_;
};

/// Result of order(): a degree, the exact zero operator, or "nothing
/// nonzero above the floor".
struct Order {
  enum class Kind { Finite, MinusInfinity, BelowFloor };
  Kind kind = Kind::MinusInfinity;
  int value = 0;

  bool finite() const { return kind == Kind::Finite; }
  friend bool operator==(const Order&, const Order&) = default;
};

/// Leibniz product sum_alpha (1/alpha!) d_xi^alpha P * d_x^alpha Q.
///
/// floor(P o Q) = max(P.floor + Q.top, P.top + Q.floor), exact floors
/// counting as -infinity. Exact inputs give an exact result when the alpha
/// sum terminates and the context's default floor otherwise.
Operator compose(const Operator& p, const Operator& q);
Operator commutator(const Operator& p, const Operator& q);

/// Pointwise (commutative) product of total symbols, with the compose floor
/// rule. Not an operator product; used by the expression language.
Operator symbol_product(const Operator& p, const Operator& q);

Order order(const Operator& p);
/// Throws FloorViolation when m is below a finite floor.
HomogeneousSymbol symbol_at(const Operator& p, int m);
/// symbol_at(p, order(p)); nullopt when the order is not finite.
std::optional<HomogeneousSymbol> principal_symbol(const Operator& p);
GradedElement gr(const Operator& p);

/// Two-sided inverse, reliable so that P o R = R o P = 1 on degrees >=
/// target_floor. The principal symbol must be a unit monomial.
Operator invert(const Operator& p, int target_floor);

/// P o Q o P^{-1}, reliable down to target_floor.
Operator ad(const Operator& p, const Operator& q, int target_floor);

/// Q with Q o Q = P, adjoint(Q) = Q and sigma_0(Q) = 1, to target_floor.
/// P must have order 0, sigma_0(P) = 1 and be self-adjoint (theta = dx).
Operator self_adjoint_sqrt(const Operator& p, int target_floor);

/// sqrt(P0 o P0*)^{-1} o P0, which is star-unitary to target_floor.
Operator unitarize(const Operator& p0, int target_floor);

/// Outcome of comparing two operators on their common reliable range.
struct Agreement {
  bool equal = true;
  std::optional<int> floor;             // common reliable floor; nullopt = exact
  std::optional<int> first_difference;  // highest differing degree
};

Agreement compare(const Operator& a, const Operator& b);

/// Equality on every degree >= floor. Throws InsufficientFloor when either
/// operator is not reliable that far down.
bool agree_to(const Operator& a, const Operator& b, int floor);

/// True when every reliable component vanishes except a constant in degree 0.
bool is_central_scalar(const Operator& p);

}  // namespace mdcalc
