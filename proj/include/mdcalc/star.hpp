#pragma once

#include <optional>
#include <string>

#include "mdcalc/operator.hpp"

namespace mdcalc {

/// theta = f dx with f a unit monomial in x alone, so 1/f stays in the
/// coefficient ring.
class VolumeDensity {
 public:
  /// Throws SchemaError if the symbol is not a single x-only monomial.
  explicit VolumeDensity(HomogeneousSymbol density);
  static VolumeDensity standard(int nvars);

  const HomogeneousSymbol& density() const { return density_; }
  std::string to_string() const { return density_.to_string(); }

 private:
  HomogeneousSymbol density_;
};

/// Formal adjoint for theta = dx:
///   sum_alpha ((-1)^|alpha| / alpha!) (d_xi^alpha d_x^alpha sigma)(x, -xi).
/// Keeps top and floor. Linear over Q(i); coefficients are not conjugated.
Operator adjoint(const Operator& p);

/// M_{1/f} o adjoint(P) o M_f for theta = f dx.
Operator adjoint_wrt(const Operator& p, const VolumeDensity& theta);

struct StarUnitarity {
  bool ok = false;
  std::optional<int> first_defect_degree;
  std::optional<HomogeneousSymbol> defect_symbol;
  std::string reason;
};

/// order 0, sigma_0 = 1 and P o P* = 1 on every reliable degree.
StarUnitarity is_star_unitary(const Operator& p);

/// D = P0 o P0*, the operator measuring how far ad(P0) is from commuting
/// with the anti-involution: ad(P0)(Q*) = ad(D)((ad(P0) Q)*).
Operator star_commutation_defect(const Operator& p0, const Operator& q, int target_floor);

struct DefectCheck {
  Operator defect;
  Operator lhs;  // ad(P0, Q*)
  Operator rhs;  // ad(D, (ad(P0, Q))*)
  bool holds = false;
};

/// Evaluates both sides of the commutation-defect identity to target_floor.
DefectCheck verify_star_commutation(const Operator& p0, const Operator& q, int target_floor);

/// Whether ad(C) fixes 1, every x_i and every xi_i to target_floor.
bool fixes_generators(const Operator& c, int target_floor);

struct AdStructure {
  bool preserves_order = false;
  bool preserves_symbols = false;
  bool commutes_with_adjoint = false;
  bool ok() const { return preserves_order && preserves_symbols && commutes_with_adjoint; }
};

/// For P of order 0 with sigma_0(P) = 1: does ad(P) keep order(Q), every
/// sigma_m(Q) for m >= order(Q), and (when P is star-unitary) commute with
/// adjoint? Evaluated to target_floor.
AdStructure check_ad_structure(const Operator& p, const Operator& q, int target_floor);

}  // namespace mdcalc
