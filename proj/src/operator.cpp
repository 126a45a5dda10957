#include "mdcalc/operator.hpp"

#include <algorithm>
#include <limits>
#include <vector>

#include "mdcalc/errors.hpp"
#include "multi_index.hpp"

namespace mdcalc {

namespace {

constexpr int kMinusInfinity = std::numeric_limits<int>::min() / 4;

int low_end(const Operator& p) { return p.floor() ? *p.floor() : kMinusInfinity; }

void require_same_context(const Operator& a, const Operator& b) {
  if (!(a.context() == b.context())) {
    throw Error(ErrorKind::ContextMismatch,
                "operators in contexts (n=" + std::to_string(a.nvars()) + ", default floor " +
                    std::to_string(a.context().default_floor) + ") and (n=" +
                    std::to_string(b.nvars()) + ", default floor " +
                    std::to_string(b.context().default_floor) + ")");
  }
}

void accumulate(Operator::Components& out, int nvars, int degree, const HomogeneousSymbol& s) {
  auto it = out.try_emplace(degree, nvars, degree).first;
  it->second += s;
}

// Upper bounds on alpha_i beyond which every term d_xi^alpha p * d_x^alpha q
// vanishes, or false when some term never vanishes (a negative xi exponent
// in P meeting a negative x exponent in Q).
bool leibniz_terminates(const Operator& p, const Operator& q, std::vector<int>& caps) {
  const int n = p.nvars();
  std::vector<bool> p_neg(n, false), q_neg(n, false);
  caps.assign(n, 0);
  for (const auto& [deg, s] : p.components()) {
    for (const auto& [key, c] : s.terms()) {
      for (int i = 0; i < n; ++i) {
        if (key[i] < 0) p_neg[i] = true;
        else caps[i] = std::max(caps[i], key[i]);
      }
    }
  }
  for (const auto& [deg, s] : q.components()) {
    for (const auto& [key, c] : s.terms()) {
      for (int i = 0; i < n; ++i) {
        if (key[n + i] < 0) q_neg[i] = true;
        else caps[i] = std::max(caps[i], key[n + i]);
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    if (p_neg[i] && q_neg[i]) return false;
  }
  return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// Operator

Operator::Operator(TruncationContext ctx, int top) : ctx_(ctx), top_(top) {
  if (ctx.nvars < 1) throw Error(ErrorKind::BadVariableIndex, "variable count must be positive");
}

Operator Operator::from_components(TruncationContext ctx, int top, std::optional<int> floor,
                                   const Components& components) {
  Operator op(ctx, top);
  op.floor_ = floor;
  for (const auto& [deg, s] : components) {
    if (s.degree() != deg) {
      throw Error(ErrorKind::DegreeMismatch, "component keyed " + std::to_string(deg) +
                                                 " has degree " + std::to_string(s.degree()));
    }
    if (s.nvars() != ctx.nvars) {
      throw Error(ErrorKind::ContextMismatch, "component in the wrong number of variables");
    }
    if (s.is_zero()) continue;
    if (deg > top || (floor && deg < *floor)) {
      throw Error(ErrorKind::FloorViolation,
                  "component of degree " + std::to_string(deg) + " outside the reliable range");
    }
    op.components_.emplace(deg, s);
  }
  return op;
}

Operator Operator::constant(TruncationContext ctx, const Scalar& c) {
  return from_symbol(ctx, HomogeneousSymbol::constant(ctx.nvars, c));
}

Operator Operator::from_symbol(TruncationContext ctx, const HomogeneousSymbol& s) {
  return from_components(ctx, s.degree(), std::nullopt, {{s.degree(), s}});
}

Operator Operator::x(TruncationContext ctx, int i) {
  if (i < 1 || i > ctx.nvars) throw Error(ErrorKind::BadVariableIndex, "x" + std::to_string(i));
  std::vector<int> xe(ctx.nvars, 0), xie(ctx.nvars, 0);
  xe[i - 1] = 1;
  return from_symbol(ctx, HomogeneousSymbol::monomial(Scalar(1), xe, xie));
}

Operator Operator::xi(TruncationContext ctx, int i) {
  if (i < 1 || i > ctx.nvars) throw Error(ErrorKind::BadVariableIndex, "xi" + std::to_string(i));
  std::vector<int> xe(ctx.nvars, 0), xie(ctx.nvars, 0);
  xie[i - 1] = 1;
  return from_symbol(ctx, HomogeneousSymbol::monomial(Scalar(1), xe, xie));
}

HomogeneousSymbol Operator::component(int degree) const {
  auto it = components_.find(degree);
  return it == components_.end() ? HomogeneousSymbol(ctx_.nvars, degree) : it->second;
}

Operator Operator::truncated(int floor) const {
  Operator r = *this;
  int f = floor_ ? std::max(*floor_, floor) : floor;
  r.floor_ = f;
  r.components_.erase(r.components_.begin(), r.components_.lower_bound(f));
  return r;
}

Operator Operator::trimmed() const {
  Operator r = *this;
  if (!components_.empty()) r.top_ = components_.rbegin()->first;
  return r;
}

Operator& Operator::operator+=(const Operator& o) {
  require_same_context(*this, o);
  top_ = std::max(top_, o.top_);
  if (floor_ || o.floor_) floor_ = std::max(low_end(*this), low_end(o));
  for (const auto& [deg, s] : o.components_) accumulate(components_, ctx_.nvars, deg, s);
  if (floor_) components_.erase(components_.begin(), components_.lower_bound(*floor_));
  std::erase_if(components_, [](const auto& kv) { return kv.second.is_zero(); });
  return *this;
}

Operator& Operator::operator-=(const Operator& o) { return *this += -o; }

Operator& Operator::operator*=(const Scalar& c) {
  for (auto& [deg, s] : components_) s *= c;
  std::erase_if(components_, [](const auto& kv) { return kv.second.is_zero(); });
  return *this;
}

Operator Operator::operator-() const {
  Operator r = *this;
  for (auto& [deg, s] : r.components_) s = -s;
  return r;
}

std::string Operator::to_string() const {
  std::string out;
  for (auto it = components_.rbegin(); it != components_.rend(); ++it) {
    std::string text = it->second.to_string();
    if (out.empty()) {
      out = text;
    } else if (text.front() == '-') {
      out += " - " + text.substr(1);
    } else {
      out += " + " + text;
    }
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// Products

Operator compose(const Operator& p, const Operator& q) {
  require_same_context(p, q);
  const int n = p.nvars();
  const int top = p.top() + q.top();
  std::vector<int> caps(n, -1);
  std::optional<int> floor;
  int lo = kMinusInfinity;
  if (p.is_exact() && q.is_exact()) {
    if (!leibniz_terminates(p, q, caps)) {
      caps.assign(n, -1);
      floor = p.context().default_floor;
      lo = *floor;
    }
  } else {
    lo = std::max(low_end(p) + q.top(), p.top() + low_end(q));
    floor = lo;
  }
  if (p.components().empty() || q.components().empty()) {
    return Operator::from_components(p.context(), top, floor, {});
  }

  const int p_max = p.components().rbegin()->first;
  const int q_max = q.components().rbegin()->first;
  int max_total = 0;
  if (lo == kMinusInfinity) {
    for (int c : caps) max_total += c;
  } else {
    max_total = p_max + q_max - lo;
  }

  Operator::Components out;
  std::vector<std::pair<int, HomogeneousSymbol>> dq;
  for_each_multi_index(n, max_total, caps, [&](const std::vector<int>& alpha, int k) {
    dq.clear();
    for (const auto& [j, qj] : q.components()) {
      if (p_max - k + j < lo) continue;
      HomogeneousSymbol s = d_mixed(qj, {}, alpha);
      if (!s.is_zero()) dq.emplace_back(j, std::move(s));
    }
    if (dq.empty()) return;
    Scalar weight(1);
    for (int a : alpha) weight *= inverse_factorial(a);
    for (const auto& [i, pi] : p.components()) {
      if (i - k + q_max < lo) continue;
      HomogeneousSymbol dp = d_mixed(pi, alpha, {});
      if (dp.is_zero()) continue;
      for (const auto& [j, dqj] : dq) {
        const int d = i - k + j;
        if (d < lo) continue;
        out.try_emplace(d, n, d).first->second.add_product(dp, dqj, weight);
      }
    }
  });
  return Operator::from_components(p.context(), top, floor, out);
}

Operator commutator(const Operator& p, const Operator& q) { return compose(p, q) - compose(q, p); }

Operator symbol_product(const Operator& p, const Operator& q) {
  require_same_context(p, q);
  const int top = p.top() + q.top();
  std::optional<int> floor;
  int lo = kMinusInfinity;
  if (!(p.is_exact() && q.is_exact())) {
    lo = std::max(low_end(p) + q.top(), p.top() + low_end(q));
    floor = lo;
  }
  Operator::Components out;
  for (const auto& [i, pi] : p.components()) {
    for (const auto& [j, qj] : q.components()) {
      if (i + j < lo) continue;
      out.try_emplace(i + j, p.nvars(), i + j).first->second.add_product(pi, qj, Scalar(1));
    }
  }
  return Operator::from_components(p.context(), top, floor, out);
}

// ---------------------------------------------------------------------------
// Filtration and symbols

Order order(const Operator& p) {
  if (!p.components().empty()) return {Order::Kind::Finite, p.components().rbegin()->first};
  if (p.is_exact()) return {Order::Kind::MinusInfinity, 0};
  return {Order::Kind::BelowFloor, *p.floor()};
}

HomogeneousSymbol symbol_at(const Operator& p, int m) {
  if (p.floor() && m < *p.floor()) {
    throw Error(ErrorKind::FloorViolation, "degree " + std::to_string(m) +
                                               " is below the reliability floor " +
                                               std::to_string(*p.floor()));
  }
  return p.component(m);
}

std::optional<HomogeneousSymbol> principal_symbol(const Operator& p) {
  Order o = order(p);
  if (!o.finite()) return std::nullopt;
  return p.component(o.value);
}

GradedElement gr(const Operator& p) {
  GradedElement g;
  for (const auto& [deg, s] : p.components()) g.components.emplace(deg, s);
  return g;
}

// ---------------------------------------------------------------------------
// Inverses and ad

Operator invert(const Operator& p, int target_floor) {
  Order o = order(p);
  if (!o.finite()) {
    throw Error(ErrorKind::NotInvertible, "operator has no nonzero component above its floor");
  }
  const int m = o.value;
  const HomogeneousSymbol sigma = p.component(m);
  if (!sigma.is_unit()) {
    throw Error(ErrorKind::NotInvertible,
                "principal symbol " + sigma.to_string() + " is not a unit monomial");
  }
  if (p.floor() && *p.floor() > target_floor + m) {
    throw Error(ErrorKind::InsufficientFloor,
                "inverse to degree " + std::to_string(target_floor) + " needs the input floor <= " +
                    std::to_string(target_floor + m) + ", have " + std::to_string(*p.floor()));
  }
  const TruncationContext ctx = p.context();
  const Operator lead = p.trimmed().truncated(target_floor + m);
  const Operator one = Operator::one(ctx);
  const Operator reciprocal = Operator::from_symbol(ctx, sigma.reciprocal());
  const int result_floor = target_floor - m;

  // Newton step R <- R + R o (1 - P o R); the residual squares every round.
  Operator r = reciprocal.truncated(result_floor);
  for (int round = 0; round <= -target_floor + 2; ++round) {
    Operator residual = (one - compose(lead, r)).truncated(target_floor);
    if (residual.components().empty()) return r;
    r = (r + compose(r, residual)).truncated(result_floor);
  }
  throw Error(ErrorKind::NotInvertible, "inverse iteration failed to converge");
}

Operator ad(const Operator& p, const Operator& q, int target_floor) {
  const Operator lead = p.trimmed();
  const Operator arg = q.trimmed();
  Order o = order(lead);
  if (!o.finite()) {
    throw Error(ErrorKind::NotInvertible, "operator has no nonzero component above its floor");
  }
  const Operator pq = compose(lead, arg);
  const Operator inverse = invert(lead, target_floor - arg.top());
  Operator result = compose(pq, inverse);
  if (result.floor() && *result.floor() > target_floor) {
    throw Error(ErrorKind::InsufficientFloor,
                "ad reliable only down to " + std::to_string(*result.floor()) + ", asked for " +
                    std::to_string(target_floor));
  }
  return result.truncated(target_floor);
}

// ---------------------------------------------------------------------------
// Comparison

Agreement compare(const Operator& a, const Operator& b) {
  require_same_context(a, b);
  Agreement r;
  if (a.floor() || b.floor()) r.floor = std::max(low_end(a), low_end(b));
  const int lo = r.floor.value_or(kMinusInfinity);
  std::vector<int> degrees;
  for (const auto& [d, s] : a.components()) degrees.push_back(d);
  for (const auto& [d, s] : b.components()) degrees.push_back(d);
  std::sort(degrees.begin(), degrees.end(), std::greater<>());
  for (int d : degrees) {
    if (d < lo) break;
    if (!(a.component(d) == b.component(d))) {
      r.equal = false;
      r.first_difference = d;
      break;
    }
  }
  return r;
}

bool agree_to(const Operator& a, const Operator& b, int floor) {
  for (const Operator* op : {&a, &b}) {
    if (op->floor() && *op->floor() > floor) {
      throw Error(ErrorKind::InsufficientFloor,
                  "operator reliable only down to " + std::to_string(*op->floor()) +
                      ", compared at " + std::to_string(floor));
    }
  }
  return compare(a.truncated(floor), b.truncated(floor)).equal;
}

bool is_central_scalar(const Operator& p) {
  for (const auto& [deg, s] : p.components()) {
    Scalar c;
    if (deg != 0 || !s.as_constant(c)) return false;
  }
  return true;
}

}  // namespace mdcalc
