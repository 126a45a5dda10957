#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace mdcalc::xm {

/// A finite group given by its Cayley table over element indices 0..n-1.
///
/// Construction only checks the table's shape; the group axioms are
/// checked by validate(), which lists every failure.
class FiniteGroup {
 public:
  FiniteGroup(std::vector<std::string> labels, std::vector<std::vector<int>> table);

  static FiniteGroup trivial();
  static FiniteGroup cyclic(int n);  // labels "0".."n-1"
  /// Permutations of {1,2,3}: e, (12), (13), (23), (123), (132); products
  /// compose right to left.
  static FiniteGroup symmetric3();
  /// Symmetries of the square: rotations r0..r3, reflections s0..s3.
  static FiniteGroup dihedral4();
  /// "1", "Z/n", "S3" or "D4"; throws SchemaError for anything else.
  static FiniteGroup named(std::string_view name);

  int order() const { return static_cast<int>(labels_.size()); }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[a][b]; }
  int inverse(int a) const { return inverse_[a]; }
  const std::string& label(int a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::vector<int>>& table() const { return table_; }
  /// Throws SchemaError for an unknown label.
  int index_of(std::string_view label) const;

  /// Every violated axiom, e.g. "associativity fails at (a, b, c)".
  std::vector<std::string> validate() const;
  bool is_abelian() const;

  /// The same group with element a renamed to position perm[a].
  FiniteGroup relabeled(const std::vector<int>& perm) const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> table_;
  int identity_ = -1;
  std::vector<int> inverse_;
};

/// Subgroup on the given elements (must be closed), labels inherited.
FiniteGroup subgroup(const FiniteGroup& g, const std::vector<int>& elements);
/// Quotient by a normal subgroup; cosets are labelled by their least member.
FiniteGroup quotient(const FiniteGroup& g, const std::vector<int>& normal);
/// Brute-force isomorphism test for small groups.
bool are_isomorphic(const FiniteGroup& a, const FiniteGroup& b);

}  // namespace mdcalc::xm
