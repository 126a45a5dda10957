#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mdcalc/crossed_module.hpp"

namespace mdcalc::xm {

/// The nerve of a finite cover. Opens carry user labels; internally they are
/// positions 0..n-1. Doubles and triples are stored sorted by position.
class Cover {
 public:
  /// Throws SchemaError for unknown or repeated opens, degenerate simplices
  /// and triples whose edges are not listed (nerve closure).
  Cover(std::vector<int> opens, std::vector<std::pair<int, int>> doubles,
        std::vector<std::vector<int>> triples);

  /// k opens, every pair and every triple.
  static Cover full_nerve(int k);
  /// Three opens, three doubles, no triples.
  static Cover circle();

  int size() const { return static_cast<int>(opens_.size()); }
  const std::vector<int>& opens() const { return opens_; }
  const std::vector<std::pair<int, int>>& doubles() const { return doubles_; }
  const std::vector<std::array<int, 3>>& triples() const { return triples_; }
  /// Position of the edge {i, j} in doubles(), or -1.
  int edge_index(int i, int j) const;
  bool is_connected() const;

  /// Open at position p moves to position perm[p].
  Cover relabeled(const std::vector<int>& perm) const;

 private:
  std::vector<int> opens_;
  std::vector<std::pair<int, int>> doubles_;
  std::vector<std::array<int, 3>> triples_;
};

/// g per open, h per listed double (i < j), read as h_ij: g_j -> g_i, i.e.
/// g_i = d(h_ij) g_j. h_ii = e and h_ji = h_ij^-1 are implied.
struct DescentDatum {
  std::vector<int> g;
  std::vector<int> h;
  friend bool operator==(const DescentDatum&, const DescentDatum&) = default;
  friend auto operator<=>(const DescentDatum&, const DescentDatum&) = default;
};

DescentDatum trivial_datum(const Cover& cover, const CrossedModule& cm);

/// h_ij for any ordered pair of opens that is an edge or a diagonal.
int h_at(const Cover& cover, const CrossedModule& cm, const DescentDatum& datum, int i, int j);

/// Every failed edge relation and triple cocycle condition.
std::vector<std::string> validate_descent(const Cover& cover, const CrossedModule& cm,
                                          const DescentDatum& datum);

/// All {k_i} with g2_i = d(k_i) g1_i and h2_ij k_j = k_i h1_ij.
std::vector<std::vector<int>> descent_morphisms(const Cover& cover, const CrossedModule& cm,
                                                const DescentDatum& from, const DescentDatum& to);

/// The unique datum that k maps `from` to: g_i -> d(k_i) g_i,
/// h_ij -> k_i h_ij k_j^-1.
DescentDatum gauge(const Cover& cover, const CrossedModule& cm, const DescentDatum& from,
                   const std::vector<int>& k);

struct H1Class {
  /// The trivial datum for the pointed class, otherwise the least datum.
  DescentDatum representative;
  std::uint64_t size = 0;       // valid data in the class
  std::uint64_t automorphisms = 0;
};

struct H1Classification {
  std::vector<H1Class> classes;  // ordered by least member
  int pointed_class_index = -1;
  std::uint64_t search_size = 0;  // |G^0|^opens |G^-1|^doubles, saturating
  std::uint64_t valid_data = 0;
};

constexpr std::uint64_t kDefaultBudget = 10'000'000;

/// Isomorphism classes of descent data by exhaustive search. Throws
/// BudgetExceeded when search_size exceeds the budget.
H1Classification classify_h1(const Cover& cover, const CrossedModule& cm,
                             std::uint64_t budget = kDefaultBudget);

std::uint64_t search_size(const Cover& cover, const CrossedModule& cm);

}  // namespace mdcalc::xm
