#pragma once

// Test-only oracle: differential operators sum_beta a_beta(x) d^beta acting
// on Laurent polynomials in x. Shares no derivative or product code with
// the symbol calculus it checks.

#include <map>
#include <vector>

#include "mdcalc/operator.hpp"

namespace oracle {

using mdcalc::Scalar;

struct LaurentPoly {
  int nvars = 1;
  std::map<std::vector<int>, Scalar> terms;  // x-exponents -> coefficient

  static LaurentPoly monomial(int nvars, std::vector<int> exps);
  void add(const std::vector<int>& exps, const Scalar& c);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;
};

LaurentPoly derivative(const LaurentPoly& u, int var);
LaurentPoly product(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly sum(const LaurentPoly& a, const LaurentPoly& b);

struct DifferentialOperator {
  int nvars = 1;
  // multi-index beta -> coefficient a_beta(x)
  std::map<std::vector<int>, LaurentPoly> coefficients;
};

/// Reads an exact operator whose xi exponents are all nonnegative: the
/// monomial c x^a xi^b becomes the term c x^a d^b.
DifferentialOperator from_symbol(const mdcalc::Operator& p);

LaurentPoly apply(const DifferentialOperator& p, const LaurentPoly& u);
/// v -> sum_beta (-d)^beta (a_beta v), the formal adjoint for dx.
LaurentPoly apply_adjoint(const DifferentialOperator& p, const LaurentPoly& v);

/// All monomials x^gamma with gamma >= 0 and |gamma| <= max_degree.
std::vector<LaurentPoly> test_monomials(int nvars, int max_degree);

}  // namespace oracle
