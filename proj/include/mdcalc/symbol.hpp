#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "mdcalc/scalar.hpp"

namespace mdcalc {

/// Exponent key of a monomial x^a xi^b in n variables, laid out as
/// [b_1..b_n, a_1..a_n]. Lexicographic comparison of this vector is the
/// canonical term order (xi exponents first, then x exponents).
using ExponentKey = std::vector<int>;

struct Monomial {
  Scalar coeff;
  std::vector<int> x_exps;
  std::vector<int> xi_exps;
};

/// A section of O(m) in the affine chart: a Laurent polynomial in x and xi,
/// homogeneous of total xi-degree m. The zero symbol has no terms but still
/// carries its degree.
class HomogeneousSymbol {
 public:
  using Terms = std::map<ExponentKey, Scalar>;

  HomogeneousSymbol(int nvars, int degree);

  static HomogeneousSymbol constant(int nvars, const Scalar& c);
  /// Degree is sum(xi_exps). Both spans must have length nvars.
  static HomogeneousSymbol monomial(const Scalar& c, std::span<const int> x_exps,
                                    std::span<const int> xi_exps);

  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }

  std::vector<Monomial> monomials() const;

  /// Adds c * x^a xi^b, merging with an existing term. The key must be
  /// homogeneous of this symbol's degree.
  void add_term(const ExponentKey& key, const Scalar& c);
  /// this += c * a * b; deg a + deg b must equal this degree.
  void add_product(const HomogeneousSymbol& a, const HomogeneousSymbol& b, const Scalar& c);

  /// True for a single nonzero monomial, i.e. a unit of the Laurent ring.
  bool is_unit() const { return terms_.size() == 1; }
  /// Multiplicative inverse of a unit monomial; throws NotInvertible otherwise.
  HomogeneousSymbol reciprocal() const;

  /// The constant term value when the symbol is a scalar (degree 0, only the
  /// zero exponent). Returns false otherwise.
  bool as_constant(Scalar& out) const;

  HomogeneousSymbol& operator+=(const HomogeneousSymbol& o);
  HomogeneousSymbol& operator-=(const HomogeneousSymbol& o);
  HomogeneousSymbol& operator*=(const Scalar& c);
  HomogeneousSymbol operator-() const;

  friend bool operator==(const HomogeneousSymbol& a, const HomogeneousSymbol& b) {
    return a.nvars_ == b.nvars_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

  /// Canonical text, e.g. `2*x1^2*xi1^-1 + i*xi1`; the zero symbol is `0`.
  std::string to_string() const;

 private:
  friend HomogeneousSymbol d_mixed(const HomogeneousSymbol&, std::span<const int>,
                                   std::span<const int>);
  void merge(const ExponentKey& key, const Scalar& c);

  int nvars_;
  int degree_;
  Terms terms_;
};

HomogeneousSymbol sym_add(const HomogeneousSymbol& a, const HomogeneousSymbol& b);
HomogeneousSymbol sym_sub(const HomogeneousSymbol& a, const HomogeneousSymbol& b);
HomogeneousSymbol sym_mul(const HomogeneousSymbol& a, const HomogeneousSymbol& b);
HomogeneousSymbol sym_scale(const HomogeneousSymbol& a, const Scalar& c);

// Partial derivatives; variable index i is 1-based (1 <= i <= n).
HomogeneousSymbol d_xi(const HomogeneousSymbol& a, int i);
HomogeneousSymbol d_x(const HomogeneousSymbol& a, int i);

/// Mixed derivative d_xi^alpha d_x^beta, multi-indices of length n. Either
/// may be empty to mean zero.
HomogeneousSymbol d_mixed(const HomogeneousSymbol& a, std::span<const int> xi_orders,
                          std::span<const int> x_orders);

/// {f, g} = sum_i (d_xi_i f * d_x_i g - d_x_i f * d_xi_i g).
///
/// This sign makes sigma_1([P, Q]) = {sigma_1 P, sigma_1 Q} for the
/// commutator [P, Q] = P o Q - Q o P. The opposite convention
/// sum_i (d_x_i f d_xi_i g - d_xi_i f d_x_i g) appears in parts of the
/// literature and differs by an overall sign.
HomogeneousSymbol poisson(const HomogeneousSymbol& f, const HomogeneousSymbol& g);

/// The substitution xi -> -xi, i.e. multiplication by (-1)^degree.
HomogeneousSymbol reflect_xi(const HomogeneousSymbol& a);

/// Element of the graded ring: degree -> nonzero homogeneous component.
struct GradedElement {
  std::map<int, HomogeneousSymbol> components;

  bool empty() const { return components.empty(); }
  friend bool operator==(const GradedElement&, const GradedElement&) = default;
};

}  // namespace mdcalc
