#include <doctest.h>

#include "mdcalc/errors.hpp"
#include "mdcalc/random.hpp"
#include "mdcalc/symbol.hpp"
#include "support/build.hpp"

using namespace mdcalc;
using build::m1;
using build::mono;

TEST_CASE("scalar arithmetic is exact over Q(i)") {
  Scalar i = Scalar::imaginary_unit();
  CHECK(i * i == Scalar(-1));
  Scalar z(mpq_class(1, 2), mpq_class(-3));
  CHECK(z * z.inverse() == Scalar(1));
  CHECK(Scalar::rational(2, 4).to_string() == "1/2");
  CHECK(i.to_string() == "i");
  CHECK((-i).to_string() == "-i");
  CHECK(Scalar(mpq_class(1), mpq_class(-2, 3)).to_string() == "(1-2/3*i)");
  CHECK(inverse_factorial(5) == Scalar::rational(1, 120));
  mpz_class fact70 = 1;
  for (long k = 2; k <= 70; ++k) fact70 *= k;
  CHECK(inverse_factorial(70) * Scalar(mpq_class(fact70)) == Scalar(1));
  CHECK_THROWS_AS((void)Scalar(0).inverse(), Error);
}

TEST_CASE("sym_add") {
  auto xi = m1(1, 0, 1);
  CHECK(sym_add(xi, xi) == m1(2, 0, 1));
  CHECK(sym_add(m1(1, 1, 1), m1(-1, 1, 1)).is_zero());
  CHECK(sym_add(sym_add(m1(1, 2, 1), xi), xi) == sym_add(m1(1, 2, 1), m1(2, 0, 1)));
  try {
    (void)sym_add(xi, m1(1, 0, 2));
    FAIL("expected DegreeMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegreeMismatch);
  }
}

TEST_CASE("sym_mul") {
  CHECK(sym_mul(m1(1, 0, 1), m1(1, 1, 1)) == m1(1, 1, 2));
  CHECK(sym_mul(m1(1, 0, -1), m1(1, 0, 1)) == HomogeneousSymbol::constant(1, 1));
  // (x+1) xi * x xi^-1 = x^2 + x
  auto lhs = sym_add(m1(1, 1, 1), m1(1, 0, 1));
  auto prod = sym_mul(lhs, m1(1, 1, -1));
  CHECK(prod.degree() == 0);
  CHECK(prod == sym_add(m1(1, 2, 0), m1(1, 1, 0)));
}

TEST_CASE("partial derivatives use the Laurent power rule") {
  CHECK(d_xi(m1(1, 1, 2), 1) == m1(2, 1, 1));
  CHECK(d_xi(m1(1, 0, -1), 1) == m1(-1, 0, -2));
  CHECK(d_x(m1(1, 2, -1), 1) == m1(2, 1, -1));
  CHECK(d_x(m1(1, 0, 3), 1).is_zero());
  CHECK(d_x(m1(1, 0, 3), 1).degree() == 3);
  CHECK(d_xi(m1(1, 0, 3), 1).degree() == 2);
  try {
    (void)d_x(m1(1, 1, 1), 2);
    FAIL("expected BadVariableIndex");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BadVariableIndex);
  }
  CHECK_THROWS_AS((void)d_xi(m1(1, 1, 1), 0), Error);
}

TEST_CASE("poisson bracket examples") {
  auto xi = m1(1, 0, 1);
  CHECK(poisson(xi, m1(1, 1, 1)) == xi);
  CHECK(poisson(m1(1, 0, 2), m1(1, 1, 0)) == m1(2, 0, 1));
  auto f = sym_add(m1(3, 2, 1), m1(Scalar::imaginary_unit(), -1, 1));
  CHECK(poisson(f, f).is_zero());
  CHECK(poisson(f, f).degree() == 1);
}

TEST_CASE("canonical text") {
  auto s = sym_add(mono(2, {2}, {-1}), mono(Scalar(1), {0}, {-1}));
  CHECK(s.to_string() == "2*x1^2*xi1^-1 + xi1^-1");
  auto t = sym_add(m1(Scalar::imaginary_unit(), 0, 1), m1(-1, 1, 1));
  CHECK(t.to_string() == "-x1*xi1 + i*xi1");
  CHECK(HomogeneousSymbol(2, 3).to_string() == "0");
  CHECK(mono(Scalar::rational(-1, 2), {1, 0}, {0, 2}).to_string() == "-1/2*x1*xi2^2");
  CHECK(HomogeneousSymbol::constant(1, -3).to_string() == "-3");
}

TEST_CASE("unit monomials invert") {
  auto u = mono(Scalar(mpq_class(0), mpq_class(2)), {1, -2}, {3, -1});
  CHECK(sym_mul(u, u.reciprocal()) == HomogeneousSymbol::constant(2, 1));
  CHECK_THROWS_AS((void)sym_add(m1(1, 1, 1), m1(1, 0, 1)).reciprocal(), Error);
}

namespace {

struct Triple {
  HomogeneousSymbol a, b, c;
};

Triple random_triple(Generator& gen, int n, bool same_degree) {
  int da = gen.uniform(-2, 2);
  int db = same_degree ? da : gen.uniform(-2, 2);
  int dc = same_degree ? da : gen.uniform(-2, 2);
  return {gen.symbol(n, da, 4), gen.symbol(n, db, 4), gen.symbol(n, dc, 4)};
}

}  // namespace

TEST_CASE("S1 ring laws on random triples") {
  for (int trial = 0; trial < 150; ++trial) {
    Generator gen(derive_seed(11, trial));
    const int n = 1 + trial % 2;
    auto [a, b, c] = random_triple(gen, n, false);
    CHECK(sym_mul(sym_mul(a, b), c) == sym_mul(a, sym_mul(b, c)));
    CHECK(sym_mul(a, b) == sym_mul(b, a));
    auto [p, q, r] = random_triple(gen, n, true);
    CHECK(sym_add(sym_add(p, q), r) == sym_add(p, sym_add(q, r)));
    CHECK(sym_add(p, q) == sym_add(q, p));
    CHECK(sym_mul(a, sym_add(p, q)) == sym_add(sym_mul(a, p), sym_mul(a, q)));
  }
}

TEST_CASE("S2 derivations: Leibniz rule and commutation") {
  for (int trial = 0; trial < 150; ++trial) {
    Generator gen(derive_seed(12, trial));
    const int n = 1 + trial % 2;
    auto [a, b, c] = random_triple(gen, n, false);
    for (int i = 1; i <= n; ++i) {
      CHECK(d_x(sym_mul(a, b), i) == sym_add(sym_mul(d_x(a, i), b), sym_mul(a, d_x(b, i))));
      CHECK(d_xi(sym_mul(a, b), i) == sym_add(sym_mul(d_xi(a, i), b), sym_mul(a, d_xi(b, i))));
      for (int j = 1; j <= n; ++j) {
        CHECK(d_x(d_xi(c, j), i) == d_xi(d_x(c, i), j));
        CHECK(d_x(d_x(c, j), i) == d_x(d_x(c, i), j));
        CHECK(d_xi(d_xi(c, j), i) == d_xi(d_xi(c, i), j));
      }
    }
  }
}

TEST_CASE("S3/S4 Poisson bracket: bilinear, antisymmetric, Jacobi, derivation, graded") {
  for (int trial = 0; trial < 100; ++trial) {
    Generator gen(derive_seed(13, trial));
    const int n = 1 + trial % 2;
    auto [f, g, h] = random_triple(gen, n, false);
    auto h2 = gen.symbol(n, h.degree(), 3);
    CHECK(poisson(f, g) == -poisson(g, f));
    CHECK(poisson(f, g).degree() == f.degree() + g.degree() - 1);
    CHECK(poisson(f, sym_add(h, h2)) == sym_add(poisson(f, h), poisson(f, h2)));
    Scalar c = gen.coefficient();
    CHECK(poisson(sym_scale(f, c), g) == sym_scale(poisson(f, g), c));
    auto jacobi = sym_add(sym_add(poisson(f, poisson(g, h)), poisson(g, poisson(h, f))),
                          poisson(h, poisson(f, g)));
    CHECK(jacobi.is_zero());
    CHECK(poisson(f, sym_mul(g, h)) == sym_add(sym_mul(poisson(f, g), h), sym_mul(g, poisson(f, h))));
    CHECK(poisson(sym_mul(f, g), h) == sym_add(sym_mul(f, poisson(g, h)), sym_mul(poisson(f, h), g)));
  }
  // degree-1 symbols are closed under the bracket
  Generator gen(14);
  auto a = gen.symbol(2, 1), b = gen.symbol(2, 1);
  CHECK(poisson(a, b).degree() == 1);
}
