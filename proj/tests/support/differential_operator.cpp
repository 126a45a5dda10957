#include "support/differential_operator.hpp"

#include <stdexcept>

namespace oracle {

LaurentPoly LaurentPoly::monomial(int nvars, std::vector<int> exps) {
  LaurentPoly p;
  p.nvars = nvars;
  p.add(exps, Scalar(1));
  return p;
}

void LaurentPoly::add(const std::vector<int>& exps, const Scalar& c) {
  Scalar& slot = terms[exps];
  slot += c;
  if (slot.is_zero()) terms.erase(exps);
}

LaurentPoly derivative(const LaurentPoly& u, int var) {
  LaurentPoly r;
  r.nvars = u.nvars;
  for (const auto& [e, c] : u.terms) {
    if (e[var] == 0) continue;
    std::vector<int> f = e;
    f[var] -= 1;
    r.add(f, c * Scalar(e[var]));
  }
  return r;
}

LaurentPoly product(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  r.nvars = a.nvars;
  for (const auto& [ea, ca] : a.terms) {
    for (const auto& [eb, cb] : b.terms) {
      std::vector<int> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add(e, ca * cb);
    }
  }
  return r;
}

LaurentPoly sum(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r = a;
  for (const auto& [e, c] : b.terms) r.add(e, c);
  return r;
}

DifferentialOperator from_symbol(const mdcalc::Operator& p) {
  if (!p.is_exact()) throw std::invalid_argument("oracle needs an exact operator");
  DifferentialOperator d;
  d.nvars = p.nvars();
  for (const auto& [deg, s] : p.components()) {
    for (const auto& m : s.monomials()) {
      for (int b : m.xi_exps) {
        if (b < 0) throw std::invalid_argument("oracle needs nonnegative xi exponents");
      }
      LaurentPoly& a = d.coefficients[m.xi_exps];
      a.nvars = d.nvars;
      a.add(m.x_exps, m.coeff);
    }
  }
  return d;
}

namespace {

LaurentPoly differentiate(LaurentPoly u, const std::vector<int>& beta) {
  for (std::size_t i = 0; i < beta.size(); ++i) {
    for (int k = 0; k < beta[i]; ++k) u = derivative(u, static_cast<int>(i));
  }
  return u;
}

}  // namespace

LaurentPoly apply(const DifferentialOperator& p, const LaurentPoly& u) {
  LaurentPoly r;
  r.nvars = p.nvars;
  for (const auto& [beta, a] : p.coefficients) r = sum(r, product(a, differentiate(u, beta)));
  return r;
}

LaurentPoly apply_adjoint(const DifferentialOperator& p, const LaurentPoly& v) {
  LaurentPoly r;
  r.nvars = p.nvars;
  for (const auto& [beta, a] : p.coefficients) {
    LaurentPoly t = differentiate(product(a, v), beta);
    int order = 0;
    for (int b : beta) order += b;
    if (order % 2 == 1) {
      for (auto& [e, c] : t.terms) c = -c;
    }
    r = sum(r, t);
  }
  return r;
}

std::vector<LaurentPoly> test_monomials(int nvars, int max_degree) {
  std::vector<LaurentPoly> out;
  std::vector<int> e(nvars, 0);
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (var == nvars) {
      out.push_back(LaurentPoly::monomial(nvars, e));
      return;
    }
    for (int k = 0; k <= remaining; ++k) {
      e[var] = k;
      self(self, var + 1, remaining - k);
    }
    e[var] = 0;
  };
  rec(rec, 0, max_degree);
  return out;
}

}  // namespace oracle
