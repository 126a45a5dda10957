#include "mdcalc/random.hpp"

#include <array>

namespace mdcalc {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 over the pair
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

int Generator::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

Scalar Generator::coefficient() {
  static const std::array<Scalar, 12> pool = {
      Scalar(1),
      Scalar(-1),
      Scalar(2),
      Scalar(-2),
      Scalar::rational(1, 2),
      Scalar::rational(-1, 3),
      Scalar::rational(3, 2),
      Scalar::imaginary_unit(),
      -Scalar::imaginary_unit(),
      Scalar(mpq_class(1), mpq_class(1)),
      Scalar(mpq_class(2), mpq_class(-1, 3)),
      Scalar(mpq_class(0), mpq_class(1, 2)),
  };
  return pool[uniform(0, static_cast<int>(pool.size()) - 1)];
}

HomogeneousSymbol Generator::symbol(int nvars, int degree, int max_terms, bool polynomial) {
  HomogeneousSymbol s(nvars, degree);
  const int count = uniform(1, max_terms);
  std::vector<int> x(nvars), xi(nvars);
  for (int attempt = 0; s.is_zero() || (attempt < 4 * count && static_cast<int>(s.size()) < count);
       ++attempt) {
    int rest = degree;
    for (int i = 0; i + 1 < nvars; ++i) {
      xi[i] = polynomial ? uniform(0, rest) : uniform(-2, 2);
      rest -= xi[i];
    }
    xi[nvars - 1] = rest;
    for (int i = 0; i < nvars; ++i) x[i] = polynomial ? uniform(0, 2) : uniform(-1, 2);
    s += HomogeneousSymbol::monomial(coefficient(), x, xi);
  }
  return s;
}

Operator Generator::truncated(TruncationContext ctx, int max_deg, int floor) {
  const int top = uniform(-2, max_deg);
  const int f = std::min(top, uniform(floor, floor + 2));
  Operator::Components comps;
  comps.emplace(top, symbol(ctx.nvars, top));
  for (int d = top - 1; d >= std::max(f, top - 2); --d) {
    if (coin()) comps.emplace(d, symbol(ctx.nvars, d, 3));
  }
  return Operator::from_components(ctx, top, f, comps);
}

Operator Generator::polynomial(TruncationContext ctx, int max_deg) {
  const int top = uniform(0, max_deg);
  Operator::Components comps;
  for (int d = top; d >= 0; --d) {
    if (d == top || coin()) comps.emplace(d, symbol(ctx.nvars, d, 3, true));
  }
  return Operator::from_components(ctx, top, std::nullopt, comps);
}

Operator Generator::order_at_most_one(TruncationContext ctx) {
  Operator::Components comps;
  comps.emplace(1, symbol(ctx.nvars, 1, 4));
  for (int d = 0; d >= -1; --d) {
    if (coin()) comps.emplace(d, symbol(ctx.nvars, d, 3));
  }
  return Operator::from_components(ctx, 1, std::nullopt, comps);
}

Operator Generator::unipotent(TruncationContext ctx, int floor) {
  Operator::Components comps;
  comps.emplace(0, HomogeneousSymbol::constant(ctx.nvars, Scalar(1)));
  comps.emplace(-1, symbol(ctx.nvars, -1, 2));
  if (coin() && floor <= -2) comps.emplace(-2, symbol(ctx.nvars, -2, 2));
  return Operator::from_components(ctx, 0, floor, comps);
}

Operator Generator::self_adjoint_unipotent(TruncationContext ctx, int floor) {
  Operator a = unipotent(ctx, floor) - Operator::one(ctx);
  Operator sym = (a + adjoint(a)) * Scalar::rational(1, 2);
  return Operator::one(ctx) + sym;
}

Operator Generator::invertible(TruncationContext ctx, int floor) {
  const int top = uniform(-1, 2);
  std::vector<int> x(ctx.nvars), xi(ctx.nvars);
  int rest = top;
  for (int i = 0; i + 1 < ctx.nvars; ++i) {
    xi[i] = uniform(-1, 1);
    rest -= xi[i];
  }
  xi[ctx.nvars - 1] = rest;
  for (int i = 0; i < ctx.nvars; ++i) x[i] = uniform(-1, 1);
  Operator::Components comps;
  comps.emplace(top, HomogeneousSymbol::monomial(coefficient(), x, xi));
  for (int d = top - 1; d >= std::max(top - 2, floor); --d) {
    if (coin()) comps.emplace(d, symbol(ctx.nvars, d, 2));
  }
  return Operator::from_components(ctx, top, std::min(floor, top), comps);
}

VolumeDensity Generator::density(int nvars) {
  std::vector<int> x(nvars), xi(nvars, 0);
  for (int i = 0; i < nvars; ++i) x[i] = uniform(-2, 2);
  return VolumeDensity(HomogeneousSymbol::monomial(coefficient(), x, xi));
}

}  // namespace mdcalc
