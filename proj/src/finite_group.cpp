#include "mdcalc/finite_group.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>

#include "mdcalc/errors.hpp"

namespace mdcalc::xm {

FiniteGroup::FiniteGroup(std::vector<std::string> labels, std::vector<std::vector<int>> table)
    : labels_(std::move(labels)), table_(std::move(table)) {
  const int n = order();
  if (n == 0) throw Error(ErrorKind::SchemaError, "group has no elements");
  if (static_cast<int>(table_.size()) != n) {
    throw Error(ErrorKind::SchemaError, "table has " + std::to_string(table_.size()) +
                                            " rows for " + std::to_string(n) + " elements");
  }
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n) throw Error(ErrorKind::SchemaError, "ragged table");
    for (int v : row) {
      if (v < 0 || v >= n) throw Error(ErrorKind::SchemaError, "table entry out of range");
    }
  }
  if (std::set<std::string>(labels_.begin(), labels_.end()).size() != labels_.size()) {
    throw Error(ErrorKind::SchemaError, "duplicate element labels");
  }
  for (int e = 0; e < n && identity_ < 0; ++e) {
    bool unit = true;
    for (int a = 0; a < n && unit; ++a) unit = table_[e][a] == a && table_[a][e] == a;
    if (unit) identity_ = e;
  }
  inverse_.assign(n, -1);
  if (identity_ >= 0) {
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (table_[a][b] == identity_ && table_[b][a] == identity_) inverse_[a] = b;
      }
    }
  }
}

FiniteGroup FiniteGroup::trivial() { return cyclic(1); }

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) throw Error(ErrorKind::SchemaError, "Z/n needs n >= 1");
  std::vector<std::string> labels;
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    labels.push_back(std::to_string(a));
    for (int b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  }
  return FiniteGroup(std::move(labels), std::move(table));
}

FiniteGroup FiniteGroup::symmetric3() {
  // images of (1,2,3)
  const std::vector<std::array<int, 3>> perms = {
      {1, 2, 3}, {2, 1, 3}, {3, 2, 1}, {1, 3, 2}, {2, 3, 1}, {3, 1, 2}};
  std::vector<std::string> labels = {"e", "(12)", "(13)", "(23)", "(123)", "(132)"};
  std::vector<std::vector<int>> table(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a) {
    for (int b = 0; b < 6; ++b) {
      std::array<int, 3> ab{};
      for (int k = 0; k < 3; ++k) ab[k] = perms[a][perms[b][k] - 1];
      table[a][b] = static_cast<int>(std::find(perms.begin(), perms.end(), ab) - perms.begin());
    }
  }
  return FiniteGroup(std::move(labels), std::move(table));
}

FiniteGroup FiniteGroup::dihedral4() {
  constexpr int n = 4;
  std::vector<std::string> labels;
  for (int k = 0; k < n; ++k) labels.push_back("r" + std::to_string(k));
  for (int k = 0; k < n; ++k) labels.push_back("s" + std::to_string(k));
  std::vector<std::vector<int>> table(2 * n, std::vector<int>(2 * n));
  for (int x = 0; x < 2 * n; ++x) {
    for (int y = 0; y < 2 * n; ++y) {
      int v;
      if (x < n && y < n) v = (x + y) % n;
      else if (x < n) v = (y - n + x) % n + n;
      else if (y < n) v = (x - n - y + n) % n + n;
      else v = (x - y + n) % n;
      table[x][y] = v;
    }
  }
  return FiniteGroup(std::move(labels), std::move(table));
}

FiniteGroup FiniteGroup::named(std::string_view name) {
  if (name == "1") return trivial();
  if (name == "S3") return symmetric3();
  if (name == "D4") return dihedral4();
  if (name.starts_with("Z/")) {
    std::string digits(name.substr(2));
    if (!digits.empty() && std::all_of(digits.begin(), digits.end(), ::isdigit) &&
        digits.size() < 6) {
      return cyclic(std::stoi(digits));
    }
  }
  throw Error(ErrorKind::SchemaError, "unknown named group '" + std::string(name) + "'");
}

int FiniteGroup::index_of(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) {
    throw Error(ErrorKind::SchemaError, "no element labelled '" + std::string(label) + "'");
  }
  return static_cast<int>(it - labels_.begin());
}

std::vector<std::string> FiniteGroup::validate() const {
  std::vector<std::string> out;
  const int n = order();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
          out.push_back("associativity fails at (" + label(a) + ", " + label(b) + ", " +
                        label(c) + ")");
        }
      }
    }
  }
  if (identity_ < 0) {
    out.push_back("no identity element");
    return out;
  }
  for (int a = 0; a < n; ++a) {
    if (inverse_[a] < 0) out.push_back("no inverse for " + label(a));
  }
  return out;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order(); ++a) {
    for (int b = 0; b < a; ++b) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

FiniteGroup FiniteGroup::relabeled(const std::vector<int>& perm) const {
  const int n = order();
  std::vector<std::string> labels(n);
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    labels[perm[a]] = labels_[a];
    for (int b = 0; b < n; ++b) table[perm[a]][perm[b]] = perm[mul(a, b)];
  }
  return FiniteGroup(std::move(labels), std::move(table));
}

FiniteGroup subgroup(const FiniteGroup& g, const std::vector<int>& elements) {
  std::vector<int> sorted = elements;
  std::sort(sorted.begin(), sorted.end());
  std::map<int, int> position;
  for (std::size_t k = 0; k < sorted.size(); ++k) position[sorted[k]] = static_cast<int>(k);
  std::vector<std::string> labels;
  std::vector<std::vector<int>> table(sorted.size(), std::vector<int>(sorted.size()));
  for (std::size_t a = 0; a < sorted.size(); ++a) {
    labels.push_back(g.label(sorted[a]));
    for (std::size_t b = 0; b < sorted.size(); ++b) {
      auto it = position.find(g.mul(sorted[a], sorted[b]));
      if (it == position.end()) throw Error(ErrorKind::AxiomViolation, "subset is not closed");
      table[a][b] = it->second;
    }
  }
  return FiniteGroup(std::move(labels), std::move(table));
}

FiniteGroup quotient(const FiniteGroup& g, const std::vector<int>& normal) {
  const int n = g.order();
  std::vector<int> coset_of(n, -1);
  std::vector<int> leaders;
  for (int a = 0; a < n; ++a) {
    if (coset_of[a] >= 0) continue;
    const int id = static_cast<int>(leaders.size());
    leaders.push_back(a);
    for (int k : normal) coset_of[g.mul(a, k)] = id;
  }
  const int m = static_cast<int>(leaders.size());
  std::vector<std::string> labels;
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a) {
    labels.push_back("[" + g.label(leaders[a]) + "]");
    for (int b = 0; b < m; ++b) table[a][b] = coset_of[g.mul(leaders[a], leaders[b])];
  }
  return FiniteGroup(std::move(labels), std::move(table));
}

bool are_isomorphic(const FiniteGroup& a, const FiniteGroup& b) {
  const int n = a.order();
  if (n != b.order()) return false;
  if (n > 10) throw Error(ErrorKind::BudgetExceeded, "isomorphism search limited to order 10");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      for (int y = 0; y < n && ok; ++y) ok = perm[a.mul(x, y)] == b.mul(perm[x], perm[y]);
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace mdcalc::xm
