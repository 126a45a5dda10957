#include "mdcalc/suites.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>

#include "mdcalc/descent.hpp"
#include "mdcalc/errors.hpp"
#include "mdcalc/parallel.hpp"
#include "mdcalc/random.hpp"
#include "mdcalc/star.hpp"

namespace mdcalc {

namespace {

using io::Json;

struct Trial {
  const SuiteConfig& cfg;
  Generator gen;
  TruncationContext ctx;
  Json inputs = Json::object();
  std::vector<std::string> problems;
  bool skipped = false;

  void expect(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }
  const Operator& record(const std::string& name, const Operator& p) {
    inputs[name] = io::to_json(p);
    return p;
  }
  const HomogeneousSymbol& record(const std::string& name, const HomogeneousSymbol& s) {
    inputs[name] = s.to_string();
    return s;
  }
  int degree() { return gen.uniform(-2, cfg.max_deg); }
  HomogeneousSymbol symbol(const std::string& name, int degree) {
    return record(name, gen.symbol(cfg.vars, degree, 4));
  }
};

using Body = std::function<void(Trial&)>;

// --- symbols ----------------------------------------------------------------

void ring(Trial& t) {
  auto a = t.symbol("a", t.degree()), b = t.symbol("b", t.degree()), c = t.symbol("c", t.degree());
  const int d = t.degree();
  auto p = t.symbol("p", d), q = t.symbol("q", d), r = t.symbol("r", d);
  t.expect(sym_mul(sym_mul(a, b), c) == sym_mul(a, sym_mul(b, c)), "mul associativity");
  t.expect(sym_mul(a, b) == sym_mul(b, a), "mul commutativity");
  t.expect(sym_add(sym_add(p, q), r) == sym_add(p, sym_add(q, r)), "add associativity");
  t.expect(sym_add(p, q) == sym_add(q, p), "add commutativity");
  t.expect(sym_mul(a, sym_add(p, q)) == sym_add(sym_mul(a, p), sym_mul(a, q)), "distributivity");
}

void derivations(Trial& t) {
  auto a = t.symbol("a", t.degree()), b = t.symbol("b", t.degree()), c = t.symbol("c", t.degree());
  for (int i = 1; i <= t.cfg.vars; ++i) {
    const std::string at = " in variable " + std::to_string(i);
    t.expect(d_x(sym_mul(a, b), i) == sym_add(sym_mul(d_x(a, i), b), sym_mul(a, d_x(b, i))),
             "Leibniz rule for d_x" + at);
    t.expect(d_xi(sym_mul(a, b), i) == sym_add(sym_mul(d_xi(a, i), b), sym_mul(a, d_xi(b, i))),
             "Leibniz rule for d_xi" + at);
    for (int j = 1; j <= t.cfg.vars; ++j) {
      t.expect(d_x(d_xi(c, j), i) == d_xi(d_x(c, i), j), "d_x d_xi commute" + at);
      t.expect(d_x(d_x(c, j), i) == d_x(d_x(c, i), j), "d_x commute" + at);
      t.expect(d_xi(d_xi(c, j), i) == d_xi(d_xi(c, i), j), "d_xi commute" + at);
    }
  }
}

void poisson_laws(Trial& t) {
  auto f = t.symbol("f", t.degree()), g = t.symbol("g", t.degree()), h = t.symbol("h", t.degree());
  auto h2 = t.symbol("h2", h.degree());
  const Scalar c = t.gen.coefficient();
  t.expect(poisson(f, g) == -poisson(g, f), "antisymmetry");
  t.expect(poisson(f, sym_add(h, h2)) == sym_add(poisson(f, h), poisson(f, h2)), "additivity");
  t.expect(poisson(sym_scale(f, c), g) == sym_scale(poisson(f, g), c), "homogeneity");
  t.expect(sym_add(sym_add(poisson(f, poisson(g, h)), poisson(g, poisson(h, f))),
                   poisson(h, poisson(f, g)))
               .is_zero(),
           "Jacobi identity");
  t.expect(poisson(f, sym_mul(g, h)) == sym_add(sym_mul(poisson(f, g), h), sym_mul(g, poisson(f, h))),
           "derivation in the second slot");
  t.expect(poisson(sym_mul(f, g), h) == sym_add(sym_mul(f, poisson(g, h)), sym_mul(poisson(f, h), g)),
           "derivation in the first slot");
}

void bracket_grading(Trial& t) {
  auto f = t.symbol("f", t.degree()), g = t.symbol("g", t.degree());
  t.expect(poisson(f, g).degree() == f.degree() + g.degree() - 1, "degree of the bracket");
  auto a = t.symbol("a", 1), b = t.symbol("b", 1);
  t.expect(poisson(a, b).degree() == 1, "degree-1 symbols closed under the bracket");
}

// --- operators --------------------------------------------------------------

Operator truncated(Trial& t, const std::string& name) {
  return t.record(name, t.gen.truncated(t.ctx, t.cfg.max_deg, t.cfg.floor));
}

void assoc(Trial& t) {
  Operator a = truncated(t, "a"), b = truncated(t, "b"), c = truncated(t, "c");
  t.expect(compare(compose(compose(a, b), c), compose(a, compose(b, c))).equal,
           "(a o b) o c != a o (b o c) above the common floor");
}

void filtration(Trial& t) {
  Operator a = truncated(t, "a").trimmed(), b = truncated(t, "b").trimmed();
  const Operator one = Operator::one(t.ctx);
  t.expect(compose(one, a) == a && compose(a, one) == a, "1 is not a unit");
  Order oa = order(a), ob = order(b);
  if (!oa.finite() || !ob.finite()) {
    t.skipped = true;
    return;
  }
  t.expect(order(compose(a, b)) == Order{Order::Kind::Finite, oa.value + ob.value},
           "order(a o b) != order(a) + order(b)");
}

void graded(Trial& t) {
  Operator a = truncated(t, "a").trimmed(), b = truncated(t, "b").trimmed();
  Order oa = order(a), ob = order(b);
  if (!oa.finite() || !ob.finite()) {
    t.skipped = true;
    return;
  }
  t.expect(symbol_at(compose(a, b), oa.value + ob.value) ==
               sym_mul(symbol_at(a, oa.value), symbol_at(b, ob.value)),
           "sigma_{m+n}(a o b) != sigma_m(a) sigma_n(b)");
}

void jacobi(Trial& t) {
  Operator a = t.record("a", t.gen.order_at_most_one(t.ctx));
  Operator b = t.record("b", t.gen.order_at_most_one(t.ctx));
  t.expect(symbol_at(commutator(a, b), 1) == poisson(symbol_at(a, 1), symbol_at(b, 1)),
           "sigma_1([a, b]) != {sigma_1 a, sigma_1 b}");
}

void inverse(Trial& t) {
  const int f = t.cfg.floor;
  Operator p = t.record("p", t.gen.invertible(t.ctx, f - 2 * t.cfg.max_deg - 4).trimmed());
  Operator q = t.record("q", t.gen.invertible(t.ctx, f - 2 * t.cfg.max_deg - 4).trimmed());
  const Operator one = Operator::one(t.ctx);
  Operator pi = invert(p, f);
  t.expect(agree_to(compose(p, pi).truncated(f), one, f), "p o inv(p) != 1");
  t.expect(agree_to(compose(pi, p).truncated(f), one, f), "inv(p) o p != 1");
  t.expect(agree_to(invert(pi, f), p, f + order(p).value), "inv(inv(p)) != p");
  Operator lhs = invert(compose(p, q), f);
  Operator rhs = compose(invert(q, f), invert(p, f));
  t.expect(compare(lhs, rhs).equal, "inv(p o q) != inv(q) o inv(p)");
}

void ad_action(Trial& t) {
  const int in = t.cfg.floor - t.cfg.max_deg - 4;
  const int f = t.cfg.floor;
  Operator p = t.record("p", t.gen.unipotent(t.ctx, in));
  Operator q = t.record("q", t.gen.unipotent(t.ctx, in));
  Operator r = t.record("r", t.gen.truncated(t.ctx, t.cfg.max_deg, in).trimmed());
  Operator lhs = ad(compose(p, q), r, f);
  Operator rhs = ad(p, ad(q, r, f - 2), f);
  t.expect(agree_to(lhs, rhs, f), "ad(p o q, r) != ad(p, ad(q, r))");
  Operator moved = ad(p, r, f);
  if (order(r).finite() && order(r).value >= f) {
    const int m = order(r).value;
    t.expect(symbol_at(moved, m) == symbol_at(r, m), "ad(p) changes the principal symbol");
  }
}

void sqrt_suite(Trial& t) {
  const int f = t.cfg.floor;
  Operator p = t.record("p", t.gen.self_adjoint_unipotent(t.ctx, f));
  Operator q = self_adjoint_sqrt(p, f);
  t.expect(agree_to(compose(q, q).truncated(f), p, f), "q o q != p");
  t.expect(agree_to(adjoint(q), q, f), "q* != q");
  t.expect(symbol_at(q, 0) == HomogeneousSymbol::constant(t.cfg.vars, Scalar(1)),
           "sigma_0(q) != 1");
}

void floor_soundness(Trial& t) {
  Operator a = truncated(t, "a"), b = truncated(t, "b");
  const int da = t.gen.uniform(1, 3), db = t.gen.uniform(0, 3);
  Operator coarse = compose(a.truncated(*a.floor() + da), b.truncated(*b.floor() + db));
  Operator fine = compose(a, b);
  t.expect(agree_to(fine, coarse, *coarse.floor()), "compose changes reliable degrees");
  Operator u = t.record("u", t.gen.unipotent(t.ctx, t.cfg.floor));
  const int f = *u.floor(), coarser = f + t.gen.uniform(1, 3);
  t.expect(agree_to(invert(u, f), invert(u.truncated(coarser), coarser), coarser),
           "invert changes reliable degrees");
  Operator d = compose(u, a);
  t.expect(agree_to(adjoint(d), adjoint(compose(u.truncated(coarser), a)),
                    *compose(u.truncated(coarser), a).floor()),
           "adjoint changes reliable degrees");
}

// --- star structure -------------------------------------------------------

void involution(Trial& t) {
  Operator p = truncated(t, "p");
  VolumeDensity theta = t.gen.density(t.cfg.vars);
  t.inputs["theta"] = theta.to_string();
  t.expect(compare(adjoint_wrt(adjoint_wrt(p, theta), theta), p).equal, "p** != p");
}

void anti_mult(Trial& t) {
  Operator p = truncated(t, "p"), q = truncated(t, "q");
  VolumeDensity theta = t.gen.density(t.cfg.vars);
  t.inputs["theta"] = theta.to_string();
  t.expect(compare(adjoint_wrt(compose(p, q), theta),
                   compose(adjoint_wrt(q, theta), adjoint_wrt(p, theta)))
               .equal,
           "(p o q)* != q* o p*");
}

void adjoint_symbols(Trial& t) {
  Operator p = truncated(t, "p");
  VolumeDensity theta = t.gen.density(t.cfg.vars);
  t.inputs["theta"] = theta.to_string();
  Operator star = adjoint_wrt(p, theta);
  t.expect(star.top() == p.top() && star.floor() == p.floor(), "adjoint leaves F_m");
  const int m = p.top();
  t.expect(symbol_at(star, m) == reflect_xi(symbol_at(p, m)), "sigma_m(p*) != (-1)^m sigma_m(p)");
  t.expect(symbol_at(star, m) == symbol_at(adjoint(p), m), "sigma_m(p*) depends on theta");
}

Operator unitary(Trial& t, const std::string& name) {
  return t.record(name, unitarize(t.gen.unipotent(t.ctx, t.cfg.floor), t.cfg.floor));
}

void lemma_injective(Trial& t) {
  const int f = t.cfg.floor;
  Operator u = unitary(t, "u"), v = unitary(t, "v");
  const int check = f + 3;
  Operator c = compose(invert(u, f), v).truncated(f);
  if (fixes_generators(c, check)) {
    t.expect(is_central_scalar(c.truncated(check)), "generator-fixing but not scalar");
  }
  Operator same = compose(invert(u, f), u).truncated(f);
  t.expect(fixes_generators(same, check), "u^-1 u moves a generator");
  t.expect(is_central_scalar(same.truncated(check)), "u^-1 u is not scalar");
}

void lemma_structure(Trial& t) {
  const int f = t.cfg.floor;
  Operator u = unitary(t, "u");
  Operator q = t.record("q", t.gen.truncated(t.ctx, 1, f).trimmed());
  t.expect(is_star_unitary(u).ok, "unitarize output is not star-unitary");
  AdStructure s = check_ad_structure(u, q, f + 4);
  t.expect(s.preserves_order, "ad(u) changes the order");
  t.expect(s.preserves_symbols, "ad(u) changes a symbol");
  t.expect(s.commutes_with_adjoint, "ad(u) does not commute with adjoint");
}

// --- two-groups ----------------------------------------------------------

std::vector<xm::CrossedModule> module_pool() {
  using xm::CrossedModule;
  using xm::FiniteGroup;
  return {CrossedModule::identity(FiniteGroup::cyclic(2)),
          CrossedModule::identity(FiniteGroup::cyclic(3)),
          CrossedModule::identity(FiniteGroup::symmetric3()),
          CrossedModule::to_trivial(FiniteGroup::cyclic(2)),
          CrossedModule::to_trivial(FiniteGroup::cyclic(3)),
          CrossedModule::from_trivial(FiniteGroup::cyclic(2)),
          CrossedModule::from_trivial(FiniteGroup::symmetric3()),
          CrossedModule::with_trivial_action(FiniteGroup::cyclic(2), FiniteGroup::cyclic(4), {0, 2}),
          CrossedModule::with_trivial_action(FiniteGroup::cyclic(4), FiniteGroup::cyclic(4),
                                             {0, 2, 0, 2})};
}

const xm::CrossedModule& pick_module(Trial& t, const std::vector<xm::CrossedModule>& pool) {
  const auto& cm = pool[t.gen.uniform(0, static_cast<int>(pool.size()) - 1)];
  t.inputs["g1"] = io::to_json(cm.g_minus1)["elements"];
  t.inputs["g0"] = io::to_json(cm.g_zero)["elements"];
  std::vector<std::string> d;
  for (int h : cm.d) d.push_back(cm.g_zero.label(h));
  t.inputs["d"] = d;
  return cm;
}

// Random nerve on 1..4 opens: random edges, random subset of the triangles.
xm::Cover random_cover(Trial& t, bool full) {
  const int n = t.gen.uniform(1, 4);
  std::vector<int> opens(n);
  std::iota(opens.begin(), opens.end(), 1);
  std::set<std::pair<int, int>> edges;
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      if (full || t.gen.uniform(0, 2) > 0) edges.insert({a, b});
    }
  }
  std::vector<std::vector<int>> triples;
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      for (int c = b + 1; c <= n; ++c) {
        if (edges.count({a, b}) && edges.count({b, c}) && edges.count({a, c}) &&
            (full || t.gen.coin())) {
          triples.push_back({a, b, c});
        }
      }
    }
  }
  xm::Cover cover(opens, {edges.begin(), edges.end()}, triples);
  t.inputs["cover"] = {{"opens", opens}, {"doubles", Json(std::vector<std::pair<int, int>>(edges.begin(), edges.end()))}, {"triples", triples}};
  return cover;
}

std::vector<int> random_permutation(Trial& t, int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), t.gen.engine());
  return p;
}

void two_group_laws(Trial& t) {
  const auto pool = module_pool();
  const auto& cm = pick_module(t, pool);
  for (const auto& law : xm::check_two_group_laws(cm)) {
    t.expect(law.failures == 0, law.law + ": " + std::to_string(law.failures) + " of " +
                                    std::to_string(law.checks) + " checks fail");
  }
}

std::optional<xm::H1Classification> classify(Trial& t, const xm::Cover& cover,
                                             const xm::CrossedModule& cm) {
  if (xm::search_size(cover, cm) > t.cfg.budget) {
    t.skipped = true;
    return std::nullopt;
  }
  return xm::classify_h1(cover, cm, t.cfg.budget);
}

void h1_trivial(Trial& t) {
  const auto pool = module_pool();
  const auto& cm = pick_module(t, pool);
  const xm::Cover cover = random_cover(t, t.gen.coin());
  const bool bijective = std::set<int>(cm.d.begin(), cm.d.end()).size() == cm.d.size() &&
                         cm.d.size() == static_cast<std::size_t>(cm.g_zero.order());
  const bool trivial = xm::shape(cm).kind == xm::Shape::Kind::Trivial;
  t.expect(trivial == bijective, "shape is Trivial exactly when d is bijective");
  auto one_class = [](const xm::H1Classification& r) {
    return r.classes.size() == 1 && r.classes[0].automorphisms == 1;
  };
  if (trivial) {
    auto r = classify(t, cover, cm);
    if (r) t.expect(one_class(*r), "d bijective but H1 is not one class with one automorphism");
  } else {
    auto point = xm::classify_h1(xm::Cover::full_nerve(1), cm, t.cfg.budget);
    t.expect(!one_class(point), "d not bijective yet the one-open cover has one rigid class");
  }
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> class_shape(const xm::H1Classification& r) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> s;
  for (const auto& c : r.classes) s.push_back({c.size, c.automorphisms});
  std::sort(s.begin(), s.end());
  return s;
}

void h1_relabel(Trial& t) {
  const auto pool = module_pool();
  const auto& cm = pick_module(t, pool);
  const xm::Cover cover = random_cover(t, false);
  auto base = classify(t, cover, cm);
  if (!base) return;
  const xm::Cover moved = cover.relabeled(random_permutation(t, cover.size()));
  auto p1 = random_permutation(t, cm.g_minus1.order());
  auto p0 = random_permutation(t, cm.g_zero.order());
  const xm::CrossedModule renamed = xm::relabeled(cm, p1, p0);
  auto by_opens = xm::classify_h1(moved, cm, t.cfg.budget);
  auto by_elements = xm::classify_h1(cover, renamed, t.cfg.budget);
  t.expect(class_shape(by_opens) == class_shape(*base), "relabeling opens changes H1");
  t.expect(class_shape(by_elements) == class_shape(*base), "relabeling elements changes H1");
}

void h1_pointed(Trial& t) {
  const auto pool = module_pool();
  const auto& cm = pick_module(t, pool);
  const xm::Cover cover = random_cover(t, false);
  auto base = classify(t, cover, cm);
  if (!base) return;
  auto pointed_ok = [&](const xm::H1Classification& r, const xm::Cover& c,
                        const xm::CrossedModule& m) {
    return r.pointed_class_index >= 0 &&
           r.classes[r.pointed_class_index].representative == xm::trivial_datum(c, m) &&
           xm::validate_descent(c, m, xm::trivial_datum(c, m)).empty();
  };
  t.expect(pointed_ok(*base, cover, cm), "pointed class missing");
  const xm::Cover moved = cover.relabeled(random_permutation(t, cover.size()));
  const xm::CrossedModule renamed = xm::relabeled(cm, random_permutation(t, cm.g_minus1.order()),
                                                  random_permutation(t, cm.g_zero.order()));
  auto r1 = xm::classify_h1(moved, cm, t.cfg.budget);
  auto r2 = xm::classify_h1(cover, renamed, t.cfg.budget);
  t.expect(pointed_ok(r1, moved, cm) && pointed_ok(r2, cover, renamed),
           "pointed class missing after relabeling");
  const auto& b = base->classes[base->pointed_class_index];
  for (const auto* r : {&r1, &r2}) {
    const auto& c = r->classes[r->pointed_class_index];
    t.expect(c.size == b.size && c.automorphisms == b.automorphisms,
             "pointed class not fixed by relabeling");
  }
}

// |Z^1| / |B^1| for Z/p coefficients by direct enumeration: cocycles are
// edge labellings with c_ab + c_bc = c_ac on every triple, coboundaries the
// image of vertex labellings f -> f_a - f_b.
std::uint64_t abelian_h1_size(const xm::Cover& cover, int p) {
  const auto& edges = cover.doubles();
  const int m = static_cast<int>(edges.size());
  std::uint64_t cocycles = 0;
  std::vector<int> c(m, 0);
  for (;;) {
    bool ok = true;
    for (const auto& f : cover.triples()) {
      int ab = c[cover.edge_index(f[0], f[1])], bc = c[cover.edge_index(f[1], f[2])];
      int ac = c[cover.edge_index(f[0], f[2])];
      ok = ok && (ab + bc - ac) % p == 0;
    }
    if (ok) ++cocycles;
    int k = m - 1;
    while (k >= 0 && ++c[k] == p) c[k--] = 0;
    if (k < 0) break;
  }
  std::set<std::vector<int>> boundaries;
  std::vector<int> f(cover.size(), 0);
  for (;;) {
    std::vector<int> b(m);
    for (int e = 0; e < m; ++e) b[e] = ((f[edges[e].first] - f[edges[e].second]) % p + p) % p;
    boundaries.insert(b);
    int k = cover.size() - 1;
    while (k >= 0 && ++f[k] == p) f[k--] = 0;
    if (k < 0) break;
  }
  return cocycles / boundaries.size();
}

void h1_abelian(Trial& t) {
  const int p = std::vector<int>{2, 3, 5}[t.gen.uniform(0, 2)];
  const xm::CrossedModule cm = xm::CrossedModule::to_trivial(xm::FiniteGroup::cyclic(p));
  t.inputs["A"] = "Z/" + std::to_string(p);
  const xm::Cover cover = random_cover(t, false);
  auto r = classify(t, cover, cm);
  if (!r) return;
  const std::uint64_t expected = abelian_h1_size(cover, p);
  t.expect(r->classes.size() == expected,
           "H1 has " + std::to_string(r->classes.size()) + " classes, cohomology has " +
               std::to_string(expected));
}

struct Entry {
  SuiteInfo info;
  Body body;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> table = {
      {{"ring", "S1", "sym_add/sym_mul ring laws"}, ring},
      {{"derivations", "S2", "d_x, d_xi are commuting derivations"}, derivations},
      {{"poisson", "S3", "Poisson bracket is a Lie bracket and a biderivation"}, poisson_laws},
      {{"bracket-grading", "S4", "deg {f,g} = deg f + deg g - 1"}, bracket_grading},
      {{"assoc", "M1", "compose is associative above the common floor"}, assoc},
      {{"filtration", "M2", "unit law and additivity of order"}, filtration},
      {{"graded", "M3", "principal symbols multiply"}, graded},
      {{"jacobi", "M4", "sigma_1 of a commutator is the Poisson bracket"}, jacobi},
      {{"inverse", "M5", "invert is two-sided, involutive and anti-multiplicative"}, inverse},
      {{"ad-action", "M6", "ad is a group action preserving principal symbols"}, ad_action},
      {{"sqrt", "M7", "self_adjoint_sqrt squares back and is self-adjoint"}, sqrt_suite},
      {{"floor-soundness", "M8", "lower input floors never change reliable degrees"}, floor_soundness},
      {{"involution", "A1", "adjoint_wrt is an involution"}, involution},
      {{"anti-mult", "A2", "adjoint_wrt reverses products"}, anti_mult},
      {{"adjoint-symbols", "A3", "adjoint keeps F_m and flips sigma_m by (-1)^m"}, adjoint_symbols},
      {{"lemma-injective", "A4", "generator-fixing star-unitary quotients are scalar"}, lemma_injective},
      {{"lemma-structure", "A5", "ad of a star-unitary keeps order, symbols and adjoint"}, lemma_structure},
      {{"two-group-laws", "T1", "monoidal groupoid laws of the associated 2-group"}, two_group_laws},
      {{"h1-trivial", "T2", "Trivial shape iff d bijective iff one rigid H1 class"}, h1_trivial},
      {{"h1-relabel", "T3", "H1 is invariant under relabeling"}, h1_relabel},
      {{"h1-abelian", "T4", "H1 of A -> 1 matches simplicial cohomology"}, h1_abelian},
      {{"h1-pointed", "T5", "the pointed class exists and is fixed by relabeling"}, h1_pointed},
  };
  return table;
}

}  // namespace

const std::vector<SuiteInfo>& suites() {
  static const std::vector<SuiteInfo> infos = [] {
    std::vector<SuiteInfo> out;
    for (const auto& e : registry()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

io::Json SuiteReport::to_json() const {
  Json j;
  j["suite"] = suite;
  j["trials"] = trials;
  j["seed"] = seed;
  j["skipped"] = skipped;
  j["failures"] = failures;
  return j;
}

SuiteReport run_suite(std::string_view name, const SuiteConfig& cfg) {
  const auto& table = registry();
  auto it = std::find_if(table.begin(), table.end(),
                         [&](const Entry& e) { return e.info.name == name; });
  if (it == table.end()) throw Error(ErrorKind::UnknownSuite, "no suite named '" + std::string(name) + "'");
  if (cfg.trials < 0 || cfg.vars < 1 || cfg.max_deg < 0) {
    throw Error(ErrorKind::SchemaError, "trials must be >= 0, vars >= 1 and max_deg >= 0");
  }
  struct Outcome {
    std::optional<Json> failure;
    bool skipped = false;
  };
  std::vector<Outcome> outcomes(cfg.trials);
  parallel_for(static_cast<std::size_t>(cfg.trials), [&](std::size_t index) {
    Trial t{cfg, Generator(derive_seed(cfg.seed, index)), TruncationContext{cfg.vars, cfg.floor}, Json::object(), {}, false};
    try {
      it->body(t);
    } catch (const Error& e) {
      t.problems.push_back(e.what());
    }
    outcomes[index].skipped = t.skipped;
    if (!t.problems.empty()) {
      outcomes[index].failure = Json{{"trial", index}, {"problems", t.problems}, {"inputs", t.inputs}};
    }
  });
  SuiteReport report;
  report.suite = std::string(name);
  report.trials = cfg.trials;
  report.seed = cfg.seed;
  for (auto& o : outcomes) {
    if (o.skipped) ++report.skipped;
    if (o.failure) report.failures.push_back(std::move(*o.failure));
  }
  return report;
}

}  // namespace mdcalc
