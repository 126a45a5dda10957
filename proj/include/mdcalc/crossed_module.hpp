#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mdcalc/finite_group.hpp"

namespace mdcalc::xm {

/// d: G^{-1} -> G^0 with a left action (g, h) -> ^g h of G^0 on G^{-1}.
struct CrossedModule {
  FiniteGroup g_minus1;
  FiniteGroup g_zero;
  std::vector<int> d;                    // index in g_minus1 -> index in g_zero
  std::vector<std::vector<int>> action;  // action[g][h] = ^g h

  int act(int g, int h) const { return action[g][h]; }

  /// G -> G, identity map, conjugation action.
  static CrossedModule identity(const FiniteGroup& g);
  /// A -> 1 (a crossed module exactly when A is abelian).
  static CrossedModule to_trivial(const FiniteGroup& a);
  /// 1 -> G.
  static CrossedModule from_trivial(const FiniteGroup& g);
  /// Given d and the trivial action.
  static CrossedModule with_trivial_action(const FiniteGroup& g_minus1, const FiniteGroup& g_zero,
                                           std::vector<int> d);
  /// Conjugation action; only meaningful when g_minus1 sits inside g_zero
  /// with the same labels.
  static CrossedModule with_conjugation_action(const FiniteGroup& g_minus1,
                                               const FiniteGroup& g_zero, std::vector<int> d);
};

struct Violation {
  std::string axiom;
  std::vector<std::string> witnesses;  // element labels
  std::string to_string() const;
};

struct CrossedModuleReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// Exhaustive check: both groups, d a homomorphism, each ^g(.) an
/// automorphism, g -> ^g(.) a homomorphism, d(^g h) = g d(h) g^-1 and
/// ^{d(h')} h = h' h h'^-1.
CrossedModuleReport validate_crossed_module(const CrossedModule& cm);

/// Element a of G^-1 moves to perm_minus1[a], element g of G^0 to perm_zero[g].
CrossedModule relabeled(const CrossedModule& cm, const std::vector<int>& perm_minus1,
                        const std::vector<int>& perm_zero);

// --- the associated 2-group ------------------------------------------------

/// An arrow g -> d(h) g.
struct Morphism {
  int source = 0;
  int arrow = 0;
  friend bool operator==(const Morphism&, const Morphism&) = default;
};

int target(const CrossedModule& cm, const Morphism& m);
int tensor_objects(const CrossedModule& cm, int g1, int g2);
/// (g1 -h1-> g1') (x) (g2 -h2-> g2') = g1 g2 -(h1 ^{g1}h2)-> g1' g2'.
Morphism tensor_morphisms(const CrossedModule& cm, const Morphism& m1, const Morphism& m2);
/// m2 after m1; throws NonComposable unless target(m1) = source(m2).
Morphism compose_morphisms(const CrossedModule& cm, const Morphism& m2, const Morphism& m1);
Morphism identity_morphism(const CrossedModule& cm, int g);
Morphism inverse_morphism(const CrossedModule& cm, const Morphism& m);

struct LawReport {
  std::string law;
  long checks = 0;
  long failures = 0;
};

/// Interchange (m1 o m1') (x) (m2 o m2') = (m1 (x) m2) o (m1' (x) m2'),
/// over every source pair and every arrow quadruple. The per-source-pair
/// count is |G^{-1}|^4.
LawReport check_interchange(const CrossedModule& cm);
/// Associativity and units of (x) on objects and morphisms, inverses.
std::vector<LawReport> check_two_group_laws(const CrossedModule& cm);

// --- homotopy groups and shape ----------------------------------------------

/// coker d = G^0 / d(G^{-1}).
FiniteGroup pi0(const CrossedModule& cm);
/// ker d.
FiniteGroup pi1(const CrossedModule& cm);

struct Shape {
  enum class Kind { Trivial, OneObject, Discrete, General };
  Kind kind = Kind::General;
  /// ker d for OneObject, coker d for Discrete.
  std::optional<FiniteGroup> group;
};

Shape shape(const CrossedModule& cm);
std::string to_string(Shape::Kind kind);

}  // namespace mdcalc::xm
