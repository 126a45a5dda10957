#include "mdcalc/symbol.hpp"

#include <numeric>

#include "mdcalc/errors.hpp"

namespace mdcalc {

namespace {

int xi_degree(const ExponentKey& key, int nvars) {
  return std::accumulate(key.begin(), key.begin() + nvars, 0);
}

void require_same_shape(const HomogeneousSymbol& a, const HomogeneousSymbol& b) {
  if (a.nvars() != b.nvars()) {
    throw Error(ErrorKind::ContextMismatch, "symbols in " + std::to_string(a.nvars()) + " and " +
                                               std::to_string(b.nvars()) + " variables");
  }
  if (a.degree() != b.degree()) {
    throw Error(ErrorKind::DegreeMismatch, "cannot add symbols of degree " +
                                               std::to_string(a.degree()) + " and " +
                                               std::to_string(b.degree()));
  }
}

void check_index(const HomogeneousSymbol& a, int i) {
  if (i < 1 || i > a.nvars()) {
    throw Error(ErrorKind::BadVariableIndex,
                "variable index " + std::to_string(i) + " outside 1.." + std::to_string(a.nvars()));
  }
}

// e (e-1) ... (e-k+1); zero exactly when 0 <= e < k.
long falling_factorial(int e, int k) {
  long r = 1;
  for (int j = 0; j < k; ++j) r *= (e - j);
  return r;
}

std::string power_text(const char* name, int index, int exp) {
  std::string s = name + std::to_string(index);
  if (exp != 1) s += "^" + std::to_string(exp);
  return s;
}

}  // namespace

HomogeneousSymbol::HomogeneousSymbol(int nvars, int degree) : nvars_(nvars), degree_(degree) {
  if (nvars < 1) throw Error(ErrorKind::BadVariableIndex, "variable count must be positive");
}

HomogeneousSymbol HomogeneousSymbol::constant(int nvars, const Scalar& c) {
  HomogeneousSymbol s(nvars, 0);
  s.add_term(ExponentKey(2 * nvars, 0), c);
  return s;
}

HomogeneousSymbol HomogeneousSymbol::monomial(const Scalar& c, std::span<const int> x_exps,
                                              std::span<const int> xi_exps) {
  if (x_exps.size() != xi_exps.size() || x_exps.empty()) {
    throw Error(ErrorKind::BadVariableIndex, "exponent vectors must have the same positive length");
  }
  const int n = static_cast<int>(x_exps.size());
  ExponentKey key(xi_exps.begin(), xi_exps.end());
  key.insert(key.end(), x_exps.begin(), x_exps.end());
  HomogeneousSymbol s(n, xi_degree(key, n));
  s.add_term(key, c);
  return s;
}

std::vector<Monomial> HomogeneousSymbol::monomials() const {
  std::vector<Monomial> out;
  out.reserve(terms_.size());
  for (const auto& [key, c] : terms_) {
    out.push_back(Monomial{c, std::vector<int>(key.begin() + nvars_, key.end()),
                           std::vector<int>(key.begin(), key.begin() + nvars_)});
  }
  return out;
}

void HomogeneousSymbol::add_term(const ExponentKey& key, const Scalar& c) {
  if (static_cast<int>(key.size()) != 2 * nvars_) {
    throw Error(ErrorKind::BadVariableIndex, "exponent key of wrong length");
  }
  if (xi_degree(key, nvars_) != degree_) {
    throw Error(ErrorKind::DegreeMismatch, "term of xi-degree " +
                                               std::to_string(xi_degree(key, nvars_)) +
                                               " in symbol of degree " + std::to_string(degree_));
  }
  merge(key, c);
}

void HomogeneousSymbol::merge(const ExponentKey& key, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void HomogeneousSymbol::add_product(const HomogeneousSymbol& a, const HomogeneousSymbol& b,
                                    const Scalar& c) {
  if (a.nvars_ != nvars_ || b.nvars_ != nvars_) {
    throw Error(ErrorKind::ContextMismatch, "symbols with different variable counts");
  }
  if (a.degree_ + b.degree_ != degree_) {
    throw Error(ErrorKind::DegreeMismatch, "product of degree " +
                                               std::to_string(a.degree_ + b.degree_) +
                                               " added to a symbol of degree " +
                                               std::to_string(degree_));
  }
  if (c.is_zero()) return;
  ExponentKey key(2 * nvars_);
  for (const auto& [ka, ca] : a.terms_) {
    const Scalar weighted = ca * c;
    for (const auto& [kb, cb] : b.terms_) {
      for (std::size_t k = 0; k < key.size(); ++k) key[k] = ka[k] + kb[k];
      merge(key, weighted * cb);
    }
  }
}

HomogeneousSymbol HomogeneousSymbol::reciprocal() const {
  if (!is_unit()) {
    throw Error(ErrorKind::NotInvertible, "symbol " + to_string() + " is not a unit monomial");
  }
  const auto& [key, c] = *terms_.begin();
  ExponentKey inv(key.size());
  for (std::size_t k = 0; k < key.size(); ++k) inv[k] = -key[k];
  HomogeneousSymbol r(nvars_, -degree_);
  r.add_term(inv, c.inverse());
  return r;
}

bool HomogeneousSymbol::as_constant(Scalar& out) const {
  if (degree_ != 0 || terms_.size() > 1) return false;
  if (terms_.empty()) {
    out = Scalar(0);
    return true;
  }
  const auto& [key, c] = *terms_.begin();
  for (int e : key) {
    if (e != 0) return false;
  }
  out = c;
  return true;
}

HomogeneousSymbol& HomogeneousSymbol::operator+=(const HomogeneousSymbol& o) {
  require_same_shape(*this, o);
  for (const auto& [key, c] : o.terms_) add_term(key, c);
  return *this;
}

HomogeneousSymbol& HomogeneousSymbol::operator-=(const HomogeneousSymbol& o) {
  require_same_shape(*this, o);
  for (const auto& [key, c] : o.terms_) add_term(key, -c);
  return *this;
}

HomogeneousSymbol& HomogeneousSymbol::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, v] : terms_) v *= c;
  return *this;
}

HomogeneousSymbol HomogeneousSymbol::operator-() const {
  HomogeneousSymbol r = *this;
  for (auto& [key, v] : r.terms_) v = -v;
  return r;
}

std::string HomogeneousSymbol::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  // Descending canonical order: highest xi exponents first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [key, c] = *it;
    std::string factors;
    for (int i = 0; i < nvars_; ++i) {
      if (int e = key[nvars_ + i]; e != 0) {
        factors += (factors.empty() ? "" : "*") + power_text("x", i + 1, e);
      }
    }
    for (int i = 0; i < nvars_; ++i) {
      if (int e = key[i]; e != 0) {
        factors += (factors.empty() ? "" : "*") + power_text("xi", i + 1, e);
      }
    }
    std::string term;
    if (factors.empty()) {
      term = c.to_string();
    } else if (c.is_one()) {
      term = factors;
    } else if (c == Scalar(-1)) {
      term = "-" + factors;
    } else {
      term = c.to_string() + "*" + factors;
    }
    if (first) {
      out = term;
      first = false;
    } else if (term.front() == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

HomogeneousSymbol sym_add(const HomogeneousSymbol& a, const HomogeneousSymbol& b) {
  HomogeneousSymbol r = a;
  r += b;
  return r;
}

HomogeneousSymbol sym_sub(const HomogeneousSymbol& a, const HomogeneousSymbol& b) {
  HomogeneousSymbol r = a;
  r -= b;
  return r;
}

HomogeneousSymbol sym_scale(const HomogeneousSymbol& a, const Scalar& c) {
  HomogeneousSymbol r = a;
  r *= c;
  return r;
}

HomogeneousSymbol sym_mul(const HomogeneousSymbol& a, const HomogeneousSymbol& b) {
  if (a.nvars() != b.nvars()) {
    throw Error(ErrorKind::ContextMismatch, "symbols with different variable counts");
  }
  HomogeneousSymbol r(a.nvars(), a.degree() + b.degree());
  r.add_product(a, b, Scalar(1));
  return r;
}

HomogeneousSymbol d_mixed(const HomogeneousSymbol& a, std::span<const int> xi_orders,
                          std::span<const int> x_orders) {
  const int n = a.nvars();
  int lowered = 0;
  for (int k : xi_orders) lowered += k;
  HomogeneousSymbol r(n, a.degree() - lowered);
  ExponentKey key(2 * n);
  for (const auto& [ka, ca] : a.terms()) {
    long factor = 1;
    for (int i = 0; i < n && factor != 0; ++i) {
      int kxi = xi_orders.empty() ? 0 : xi_orders[i];
      int kx = x_orders.empty() ? 0 : x_orders[i];
      factor *= falling_factorial(ka[i], kxi) * falling_factorial(ka[n + i], kx);
      key[i] = ka[i] - kxi;
      key[n + i] = ka[n + i] - kx;
    }
    if (factor != 0) r.merge(key, ca * Scalar(factor));
  }
  return r;
}

HomogeneousSymbol d_xi(const HomogeneousSymbol& a, int i) {
  check_index(a, i);
  std::vector<int> orders(a.nvars(), 0);
  orders[i - 1] = 1;
  return d_mixed(a, orders, {});
}

HomogeneousSymbol d_x(const HomogeneousSymbol& a, int i) {
  check_index(a, i);
  std::vector<int> orders(a.nvars(), 0);
  orders[i - 1] = 1;
  return d_mixed(a, {}, orders);
}

HomogeneousSymbol poisson(const HomogeneousSymbol& f, const HomogeneousSymbol& g) {
  if (f.nvars() != g.nvars()) {
    throw Error(ErrorKind::ContextMismatch, "symbols with different variable counts");
  }
  HomogeneousSymbol r(f.nvars(), f.degree() + g.degree() - 1);
  for (int i = 1; i <= f.nvars(); ++i) {
    r += sym_mul(d_xi(f, i), d_x(g, i));
    r -= sym_mul(d_x(f, i), d_xi(g, i));
  }
  return r;
}

HomogeneousSymbol reflect_xi(const HomogeneousSymbol& a) {
  return a.degree() % 2 == 0 ? a : -a;
}

}  // namespace mdcalc
