#include <doctest.h>

#include "mdcalc/errors.hpp"
#include "mdcalc/random.hpp"
#include "mdcalc/star.hpp"
#include "support/build.hpp"

using namespace mdcalc;
using build::exact;
using build::m1;
using build::mono;

namespace {
const TruncationContext kOne{1, -12};
const TruncationContext kTwo{2, -12};
}  // namespace

TEST_CASE("adjoint examples (theta = dx)") {
  CHECK(adjoint(Operator::xi(kOne, 1)) == exact(kOne, {m1(-1, 0, 1)}));
  CHECK(adjoint(exact(kOne, {m1(1, 1, 1)})) == exact(kOne, {m1(-1, 1, 1), m1(-1, 0, 0)}).trimmed());
  CHECK(adjoint(Operator::x(kOne, 1)) == Operator::x(kOne, 1));
  // coefficients are not conjugated
  Operator ix = exact(kOne, {m1(Scalar::imaginary_unit(), 1, 0)});
  CHECK(adjoint(ix) == ix);
}

TEST_CASE("adjoint_wrt examples") {
  Generator gen(31);
  VolumeDensity dx = VolumeDensity::standard(1);
  for (int t = 0; t < 10; ++t) {
    Operator p = gen.truncated(kOne, 2, -6);
    CHECK(agree_to(adjoint_wrt(p, dx), adjoint(p), *p.floor()));
  }
  VolumeDensity x_dx(m1(1, 1, 0));
  Operator got = adjoint_wrt(Operator::xi(kOne, 1), x_dx);
  CHECK(got.is_exact());
  CHECK(got.to_string() == "-xi1 - x1^-1");
  CHECK_THROWS_AS(VolumeDensity(m1(1, 1, 1)), Error);
  CHECK_THROWS_AS(VolumeDensity(sym_add(m1(1, 1, 0), m1(1, 0, 0))), Error);
}

TEST_CASE("A1-A3 involution, anti-multiplicativity, symbol sign") {
  for (int t = 0; t < 60; ++t) {
    Generator gen(derive_seed(32, t));
    const TruncationContext ctx = t % 2 ? kOne : kTwo;
    Operator p = gen.truncated(ctx, 2, -6), q = gen.truncated(ctx, 2, -6);
    VolumeDensity theta = gen.density(ctx.nvars);
    Operator pstar = adjoint_wrt(p, theta);
    CHECK(pstar.floor() == p.floor());
    CHECK(pstar.top() == p.top());
    CHECK(compare(adjoint_wrt(pstar, theta), p).equal);
    CHECK(compare(adjoint_wrt(compose(p, q), theta),
                  compose(adjoint_wrt(q, theta), adjoint_wrt(p, theta)))
              .equal);
    // sigma_m(P*) = (-1)^m sigma_m(P) for P in F_m, whatever theta is
    const int m = p.top();
    CHECK(symbol_at(pstar, m) == reflect_xi(symbol_at(p, m)));
    CHECK(symbol_at(adjoint(p), m) == symbol_at(pstar, m));
  }
}

TEST_CASE("star unitarity certificate") {
  CHECK(is_star_unitary(Operator::one(kOne)).ok);
  Operator p = exact(kOne, {m1(1, 0, 0), m1(1, 0, -1)});
  StarUnitarity cert = is_star_unitary(p);
  CHECK_FALSE(cert.ok);
  REQUIRE(cert.first_defect_degree);
  CHECK(*cert.first_defect_degree == -2);
  CHECK(*cert.defect_symbol == m1(-1, 0, -2));
  CHECK_FALSE(is_star_unitary(Operator::xi(kOne, 1)).ok);
  CHECK(*is_star_unitary(Operator::xi(kOne, 1)).first_defect_degree == 1);
  CHECK_FALSE(is_star_unitary(Operator::constant(kOne, 2)).ok);
  for (int t = 0; t < 10; ++t) {
    Generator gen(derive_seed(33, t));
    const TruncationContext ctx = t % 2 ? kOne : kTwo;
    Operator u = unitarize(gen.unipotent(ctx, -6), -6);
    CHECK(is_star_unitary(u).ok);
  }
}

TEST_CASE("commutation defect identity") {
  Operator q = exact(kOne, {m1(1, 1, 1)});
  DefectCheck trivial = verify_star_commutation(Operator::one(kOne), q, -3);
  CHECK(trivial.holds);
  CHECK(agree_to(trivial.defect, Operator::one(kOne), -3));
  CHECK(agree_to(trivial.lhs, adjoint(q), -3));

  Operator p0 = exact(kOne, {m1(1, 0, 0), m1(1, 0, -1)});
  DefectCheck c = verify_star_commutation(p0, q, -3);
  CHECK(c.holds);
  CHECK(c.defect.to_string() == "1 - xi1^-2");

  Operator u = unitarize(p0, -8);
  DefectCheck cu = verify_star_commutation(u, q, -6);
  CHECK(cu.holds);
  CHECK(agree_to(cu.defect, Operator::one(kOne), -7));
}

TEST_CASE("A4/A5 shadow of the ad isomorphism") {
  for (int t = 0; t < 8; ++t) {
    Generator gen(derive_seed(34, t));
    const TruncationContext ctx = t % 2 ? kOne : kTwo;
    const int f = -5;
    Operator u = unitarize(gen.unipotent(ctx, -9), -9);
    Operator q = gen.truncated(ctx, 1, -9);
    CHECK(check_ad_structure(u, q, f).ok());
    Operator v = unitarize(gen.unipotent(ctx, -9), -9);
    Operator c = compose(invert(u, -9), v).truncated(-9);
    if (fixes_generators(c, f)) CHECK(is_central_scalar(c.truncated(f)));
    Operator same = compose(invert(u, -9), u).truncated(-9);
    CHECK(fixes_generators(same, f));
    CHECK(is_central_scalar(same.truncated(f)));
  }
  // a non-scalar moves some generator
  CHECK_FALSE(fixes_generators(exact(kOne, {m1(1, 0, 0), m1(1, 1, -1)}), -4));
}
