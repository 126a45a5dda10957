#include "mdcalc/star.hpp"

#include <limits>
#include <vector>

#include "mdcalc/errors.hpp"
#include "multi_index.hpp"

namespace mdcalc {

namespace {

Operator multiplication(TruncationContext ctx, const HomogeneousSymbol& f) {
  return Operator::from_symbol(ctx, f);
}

}  // namespace

VolumeDensity::VolumeDensity(HomogeneousSymbol density) : density_(std::move(density)) {
  if (!density_.is_unit() || density_.degree() != 0) {
    throw Error(ErrorKind::SchemaError,
                "volume density must be a single nonzero monomial, got " + density_.to_string());
  }
  const auto& key = density_.terms().begin()->first;
  for (int i = 0; i < density_.nvars(); ++i) {
    if (key[i] != 0) {
      throw Error(ErrorKind::SchemaError, "volume density must not depend on xi: " +
                                              density_.to_string());
    }
  }
}

VolumeDensity VolumeDensity::standard(int nvars) {
  return VolumeDensity(HomogeneousSymbol::constant(nvars, Scalar(1)));
}

Operator adjoint(const Operator& p) {
  const int n = p.nvars();
  std::optional<int> floor = p.floor();
  std::vector<int> caps(n, 0);
  bool terminates = true;
  // d_xi_i^a d_x_i^a kills a monomial once a exceeds a nonnegative exponent
  // of xi_i or x_i; with both negative the series never stops.
  for (const auto& [deg, s] : p.components()) {
    for (const auto& [key, c] : s.terms()) {
      for (int i = 0; i < n; ++i) {
        int e_xi = key[i], e_x = key[n + i];
        if (e_xi < 0 && e_x < 0) {
          terminates = false;
        } else {
          int cap = (e_xi >= 0 && e_x >= 0) ? std::min(e_xi, e_x) : std::max(e_xi, e_x);
          caps[i] = std::max(caps[i], cap);
        }
      }
    }
  }
  if (p.is_exact() && !terminates) floor = p.context().default_floor;
  int max_total = 0;
  if (floor) {
    caps.assign(n, -1);
    max_total = p.components().empty() ? 0 : p.components().rbegin()->first - *floor;
  } else {
    for (int c : caps) max_total += c;
  }

  Operator::Components out;
  for_each_multi_index(n, max_total, caps, [&](const std::vector<int>& alpha, int k) {
    Scalar weight(1);
    for (int a : alpha) weight *= inverse_factorial(a);
    for (const auto& [j, pj] : p.components()) {
      const int d = j - k;
      if (floor && d < *floor) continue;
      HomogeneousSymbol term = d_mixed(pj, alpha, alpha);
      if (term.is_zero()) continue;
      // (-1)^|alpha| from the formula times (-1)^(j-|alpha|) from xi -> -xi.
      term *= (j % 2 == 0) ? weight : -weight;
      auto it = out.try_emplace(d, n, d).first;
      it->second += term;
    }
  });
  return Operator::from_components(p.context(), p.top(), floor, out);
}

Operator adjoint_wrt(const Operator& p, const VolumeDensity& theta) {
  const TruncationContext ctx = p.context();
  const Operator f = multiplication(ctx, theta.density());
  const Operator f_inv = multiplication(ctx, theta.density().reciprocal());
  return compose(f_inv, compose(adjoint(p), f));
}

StarUnitarity is_star_unitary(const Operator& p) {
  StarUnitarity r;
  Order o = order(p);
  if (!o.finite()) {
    r.reason = "no nonzero component above the floor";
    return r;
  }
  if (o.value != 0) {
    r.first_defect_degree = o.value;
    r.defect_symbol = p.component(o.value);
    r.reason = "order is " + std::to_string(o.value) + ", not 0";
    return r;
  }
  const HomogeneousSymbol one = HomogeneousSymbol::constant(p.nvars(), Scalar(1));
  if (!(p.component(0) == one)) {
    r.first_defect_degree = 0;
    r.defect_symbol = sym_sub(p.component(0), one);
    r.reason = "principal symbol is not 1";
    return r;
  }
  const Operator trimmed = p.trimmed();
  const Operator defect = compose(trimmed, adjoint(trimmed)) - Operator::one(p.context());
  if (!defect.components().empty()) {
    auto it = defect.components().rbegin();
    r.first_defect_degree = it->first;
    r.defect_symbol = it->second;
    r.reason = "P o P* differs from 1";
    return r;
  }
  r.ok = true;
  return r;
}

Operator star_commutation_defect(const Operator& p0, const Operator& q, int target_floor) {
  Order o = order(p0);
  if (!o.finite() || o.value != 0) {
    throw Error(ErrorKind::NotInvertible, "commutation defect needs an invertible order-0 operator");
  }
  const int q_top = std::max(0, q.trimmed().top());
  const Operator lead = p0.trimmed();
  Operator d = compose(lead, adjoint(lead));
  if (d.floor() && *d.floor() > target_floor - q_top) {
    throw Error(ErrorKind::InsufficientFloor,
                "defect reliable only down to " + std::to_string(*d.floor()));
  }
  return d.is_exact() ? d : d.truncated(target_floor - q_top);
}

DefectCheck verify_star_commutation(const Operator& p0, const Operator& q, int target_floor) {
  Operator d = star_commutation_defect(p0, q, target_floor);
  Operator lhs = ad(p0, adjoint(q), target_floor);
  Operator rhs = ad(d, adjoint(ad(p0, q, target_floor)), target_floor);
  bool holds = agree_to(lhs, rhs, target_floor);
  return DefectCheck{std::move(d), std::move(lhs), std::move(rhs), holds};
}

bool fixes_generators(const Operator& c, int target_floor) {
  const TruncationContext ctx = c.context();
  std::vector<Operator> generators{Operator::one(ctx)};
  for (int i = 1; i <= ctx.nvars; ++i) {
    generators.push_back(Operator::x(ctx, i));
    generators.push_back(Operator::xi(ctx, i));
  }
  for (const Operator& g : generators) {
    if (!agree_to(ad(c, g, target_floor), g, target_floor)) return false;
  }
  return true;
}

AdStructure check_ad_structure(const Operator& p, const Operator& q, int target_floor) {
  AdStructure r;
  const Operator moved = ad(p, q, target_floor);
  const Order oq = order(q.truncated(target_floor));
  const Order om = order(moved);
  r.preserves_order = oq == om;
  r.preserves_symbols = true;
  if (oq.finite()) {
    for (int m = q.top(); m >= oq.value; --m) {
      if (!(symbol_at(moved, m) == symbol_at(q, m))) r.preserves_symbols = false;
    }
  }
  r.commutes_with_adjoint =
      agree_to(ad(p, adjoint(q), target_floor), adjoint(moved), target_floor);
  return r;
}

}  // namespace mdcalc
