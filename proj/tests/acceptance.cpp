// Standalone acceptance run: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "mdcalc/descent.hpp"
#include "mdcalc/errors.hpp"
#include "mdcalc/random.hpp"
#include "mdcalc/star.hpp"
#include "support/build.hpp"
#include "support/cech_oracle.hpp"
#include "support/differential_operator.hpp"

using namespace mdcalc;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  std::string name;
  double limit_seconds;  // 0: no limit
  std::function<Outcome()> run;
};

TruncationContext context_for(int trial) { return TruncationContext{1 + trial % 2, -12}; }

Outcome star_product_oracle() {
  long checks = 0, bad = 0;
  for (int t = 0; t < 200; ++t) {
    Generator gen(derive_seed(1001, t));
    const TruncationContext ctx = context_for(t);
    Operator p = gen.polynomial(ctx, 2), q = gen.polynomial(ctx, 2);
    Operator pq = compose(p, q);
    if (!pq.is_exact()) return {false, "polynomial product not exact at trial " + std::to_string(t)};
    auto dp = oracle::from_symbol(p), dq = oracle::from_symbol(q), dpq = oracle::from_symbol(pq);
    for (const auto& u : oracle::test_monomials(ctx.nvars, 8)) {
      ++checks;
      if (!(oracle::apply(dpq, u) == oracle::apply(dp, oracle::apply(dq, u)))) ++bad;
    }
  }
  return {bad == 0, "200 pairs, " + std::to_string(checks) + " monomial checks, " +
                        std::to_string(bad) + " mismatches"};
}

Outcome associativity() {
  int bad = 0;
  for (int t = 0; t < 500; ++t) {
    Generator gen(derive_seed(1002, t));
    const TruncationContext ctx = context_for(t);
    Operator a = gen.truncated(ctx, 2, -8), b = gen.truncated(ctx, 2, -8),
             c = gen.truncated(ctx, 2, -8);
    if (!compare(compose(compose(a, b), c), compose(a, compose(b, c))).equal) ++bad;
  }
  return {bad == 0, "500 triples, " + std::to_string(bad) + " failures"};
}

Outcome poisson_diagram() {
  int bad = 0;
  for (int t = 0; t < 300; ++t) {
    Generator gen(derive_seed(1003, t));
    const TruncationContext ctx = context_for(t);
    Operator a = gen.order_at_most_one(ctx), b = gen.order_at_most_one(ctx);
    if (!(symbol_at(commutator(a, b), 1) == poisson(symbol_at(a, 1), symbol_at(b, 1)))) ++bad;
  }
  return {bad == 0, "300 pairs, " + std::to_string(bad) + " failures"};
}

Outcome anti_involution() {
  int involution = 0, anti = 0, sign = 0;
  for (int t = 0; t < 300; ++t) {
    Generator gen(derive_seed(1004, t));
    const TruncationContext ctx = context_for(t);
    Operator p = gen.truncated(ctx, 2, -8), q = gen.truncated(ctx, 2, -8);
    for (int k = 0; k < 5; ++k) {
      VolumeDensity theta = gen.density(ctx.nvars);
      Operator star = adjoint_wrt(p, theta);
      if (!compare(adjoint_wrt(star, theta), p).equal) ++involution;
      if (!compare(adjoint_wrt(compose(p, q), theta),
                   compose(adjoint_wrt(q, theta), adjoint_wrt(p, theta)))
               .equal) {
        ++anti;
      }
      if (!(symbol_at(star, p.top()) == reflect_xi(symbol_at(p, p.top())))) ++sign;
    }
  }
  return {involution + anti + sign == 0,
          "1500 operator/density pairs; failures: involution " + std::to_string(involution) +
              ", anti-multiplicativity " + std::to_string(anti) + ", symbol sign " +
              std::to_string(sign)};
}

Outcome roots() {
  const int f = -10;
  int inverse = 0, sqrt = 0, unitary = 0;
  for (int t = 0; t < 100; ++t) {
    Generator gen(derive_seed(1005, t));
    const TruncationContext ctx = context_for(t);
    const Operator one = Operator::one(ctx);
    Operator p = gen.invertible(ctx, f - 6).trimmed();
    Operator pi = invert(p, f);
    if (!agree_to(compose(p, pi).truncated(f), one, f)) ++inverse;
    Operator s = gen.self_adjoint_unipotent(ctx, f);
    Operator r = self_adjoint_sqrt(s, f);
    if (!agree_to(compose(r, r).truncated(f), s, f) || !agree_to(adjoint(r), r, f)) ++sqrt;
    if (!is_star_unitary(unitarize(gen.unipotent(ctx, f), f)).ok) ++unitary;
  }
  const TruncationContext one_var{1, -12};
  using build::exact;
  using build::m1;
  const std::string inv_text =
      invert(exact(one_var, {m1(1, 0, 0), m1(-1, 1, -1)}), -2).to_string();
  const std::string ad_text =
      ad(exact(one_var, {m1(1, 0, 0), m1(1, 1, -1)}), Operator::xi(one_var, 1), -1).to_string();
  const bool worked = inv_text == "1 + x1*xi1^-1 + x1^2*xi1^-2" && ad_text == "xi1 - xi1^-1";
  return {inverse + sqrt + unitary == 0 && worked,
          "100 inputs at floor -10; failures: inverse " + std::to_string(inverse) + ", sqrt " +
              std::to_string(sqrt) + ", unitarize " + std::to_string(unitary) +
              "; invert(1 - x1*xi1^-1, -2) = " + inv_text + "; ad(1 + x1*xi1^-1, xi1) = " +
              ad_text};
}

Outcome lemma_shadow() {
  const int in = -9, f = -5;
  int structure = 0, fixing = 0, implication = 0;
  for (int t = 0; t < 50; ++t) {
    Generator gen(derive_seed(1006, t));
    const TruncationContext ctx = context_for(t);
    Operator u = unitarize(gen.unipotent(ctx, in), in);
    Operator q = gen.truncated(ctx, 1, in).trimmed();
    if (!is_star_unitary(u).ok || !check_ad_structure(u, q, f).ok()) ++structure;
  }
  for (int t = 0; t < 20; ++t) {
    Generator gen(derive_seed(1007, t));
    const TruncationContext ctx = context_for(t);
    Operator u = unitarize(gen.unipotent(ctx, in), in);
    // every other pair shares its operator, so the implication is exercised
    Operator v = t % 2 ? u : unitarize(gen.unipotent(ctx, in), in);
    Operator c = compose(invert(u, in), v).truncated(in);
    const bool fixes = fixes_generators(c, f);
    const bool scalar = is_central_scalar(c.truncated(f));
    if (fixes) ++fixing;
    if (fixes != scalar) ++implication;
  }
  return {structure == 0 && implication == 0 && fixing >= 10,
          "50 unitarized operators, " + std::to_string(structure) + " structure failures; 20 pairs, " +
              std::to_string(fixing) + " generator-fixing, " + std::to_string(implication) +
              " not scalar"};
}

Outcome appendix_a() {
  using namespace xm;
  const FiniteGroup s3 = FiniteGroup::symmetric3();
  std::vector<CrossedModule> valid = {
      CrossedModule::identity(s3),
      CrossedModule::with_trivial_action(FiniteGroup::cyclic(2), FiniteGroup::cyclic(4), {0, 2}),
      CrossedModule::to_trivial(FiniteGroup::cyclic(3))};
  CrossedModule invalid =
      CrossedModule::with_trivial_action(FiniteGroup::cyclic(2), FiniteGroup::cyclic(4), {0, 1});
  int accepted = 0;
  for (const auto& cm : valid) accepted += validate_crossed_module(cm).ok();
  const auto rejected = validate_crossed_module(invalid);
  const bool rejects = !rejected.ok() && rejected.violations[0].axiom == "d is not a homomorphism";
  LawReport interchange = check_interchange(valid[0]);
  const long per_pair = interchange.checks / (s3.order() * s3.order());
  const int t12 = s3.index_of("(12)"), c123 = s3.index_of("(123)");
  const bool tensor = tensor_morphisms(valid[0], {t12, s3.identity()}, {s3.identity(), c123}) ==
                      Morphism{t12, s3.index_of("(132)")};
  return {accepted == 3 && rejects && per_pair == 1296 && interchange.failures == 0 && tensor,
          std::to_string(accepted) + "/3 valid accepted, invalid " +
              (rejects ? "rejected" : "accepted") + "; interchange " +
              std::to_string(interchange.checks) + " checks (" + std::to_string(per_pair) +
              " per source pair), " + std::to_string(interchange.failures) + " failures"};
}

Outcome h1_trivial() {
  using namespace xm;
  int bad = 0, data = 0;
  for (const FiniteGroup& g : {FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::symmetric3()}) {
    CrossedModule cm = CrossedModule::identity(g);
    for (int opens = 1; opens <= 4; ++opens) {
      Cover cover = Cover::full_nerve(opens);
      H1Classification r = classify_h1(cover, cm, 100'000'000);
      if (r.classes.size() != 1 || r.classes[0].automorphisms != 1) ++bad;
      // each datum individually: exactly one self-morphism
      std::vector<int> gs(opens, 0);
      for (;;) {
        DescentDatum d{gs, std::vector<int>(cover.doubles().size())};
        for (std::size_t e = 0; e < cover.doubles().size(); ++e) {
          auto [i, j] = cover.doubles()[e];
          d.h[e] = g.mul(gs[i], g.inverse(gs[j]));
        }
        ++data;
        if (!validate_descent(cover, cm, d).empty() ||
            descent_morphisms(cover, cm, d, d).size() != 1) {
          ++bad;
        }
        int k = opens - 1;
        while (k >= 0 && ++gs[k] == g.order()) gs[k--] = 0;
        if (k < 0) break;
      }
    }
  }
  return {bad == 0, "12 (group, cover) pairs, " + std::to_string(data) +
                        " data checked for a single automorphism, " + std::to_string(bad) +
                        " failures"};
}

Outcome h1_oracle() {
  using namespace xm;
  auto nerve = [](const Cover& c) {
    oracle::Nerve n;
    n.vertices = c.size();
    n.edges = c.doubles();
    n.faces = c.triples();
    return n;
  };
  const Cover circle = Cover::circle();
  const Cover triangle = Cover::full_nerve(3);
  const auto a = classify_h1(circle, CrossedModule::to_trivial(FiniteGroup::cyclic(2)));
  const auto b = classify_h1(triangle, CrossedModule::from_trivial(FiniteGroup::cyclic(2)));
  const auto expect_a = oracle::power(2, oracle::h1_dimension(nerve(circle), 2));
  const auto expect_b = oracle::power(2, oracle::h0_dimension(nerve(triangle), 2));
  return {a.classes.size() == 2 && b.classes.size() == 2 && expect_a == 2 && expect_b == 2,
          "circle (Z/2 -> 1): " + std::to_string(a.classes.size()) + " classes, oracle " +
              std::to_string(expect_a) + "; triangle (1 -> Z/2): " +
              std::to_string(b.classes.size()) + " classes, oracle " + std::to_string(expect_b)};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"star product vs differential-operator oracle", 30, star_product_oracle},
      {"associativity (M1)", 60, associativity},
      {"commutator symbol is the Poisson bracket (M4)", 10, poisson_diagram},
      {"anti-involution (A1-A3)", 30, anti_involution},
      {"inverse, sqrt, unitarize at floor -10", 0, roots},
      {"ad of star-unitary operators (A4-A5)", 60, lemma_shadow},
      {"crossed-module validator and interchange law", 30, appendix_a},
      {"isomorphism d gives trivial H1 (T2)", 120, h1_trivial},
      {"H1 matches abelian cohomology (T4)", 10, h1_oracle},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && seconds > c.limit_seconds) {
      o.ok = false;
      o.detail += "; exceeded " + std::to_string(static_cast<int>(c.limit_seconds)) + " s";
    }
    failed += !o.ok;
    std::printf("%s  %-48s %7.2fs  %s\n", o.ok ? "PASS" : "FAIL", c.name.c_str(), seconds,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
