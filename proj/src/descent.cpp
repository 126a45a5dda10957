#include "mdcalc/descent.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "mdcalc/errors.hpp"
#include "mdcalc/parallel.hpp"

namespace mdcalc::xm {

Cover::Cover(std::vector<int> opens, std::vector<std::pair<int, int>> doubles,
             std::vector<std::vector<int>> triples)
    : opens_(std::move(opens)) {
  std::map<int, int> position;
  for (int p = 0; p < size(); ++p) {
    if (!position.emplace(opens_[p], p).second) {
      throw Error(ErrorKind::SchemaError, "open " + std::to_string(opens_[p]) + " is repeated");
    }
  }
  auto pos = [&](int label) {
    auto it = position.find(label);
    if (it == position.end()) {
      throw Error(ErrorKind::SchemaError, "unknown open " + std::to_string(label));
    }
    return it->second;
  };
  std::set<std::pair<int, int>> edges;
  for (auto [a, b] : doubles) {
    int i = pos(a), j = pos(b);
    if (i == j) throw Error(ErrorKind::SchemaError, "double with a repeated open");
    edges.insert({std::min(i, j), std::max(i, j)});
  }
  doubles_.assign(edges.begin(), edges.end());
  std::set<std::array<int, 3>> faces;
  for (const auto& t : triples) {
    if (t.size() != 3) throw Error(ErrorKind::SchemaError, "triple must list three opens");
    std::array<int, 3> f{pos(t[0]), pos(t[1]), pos(t[2])};
    std::sort(f.begin(), f.end());
    if (f[0] == f[1] || f[1] == f[2]) {
      throw Error(ErrorKind::SchemaError, "triple with a repeated open");
    }
    for (auto [x, y] : {std::pair{f[0], f[1]}, std::pair{f[1], f[2]}, std::pair{f[0], f[2]}}) {
      if (!edges.count({x, y})) {
        throw Error(ErrorKind::SchemaError,
                    "nerve closure: triple (" + std::to_string(opens_[f[0]]) + ", " +
                        std::to_string(opens_[f[1]]) + ", " + std::to_string(opens_[f[2]]) +
                        ") lacks the double (" + std::to_string(opens_[x]) + ", " +
                        std::to_string(opens_[y]) + ")");
      }
    }
    faces.insert(f);
  }
  triples_.assign(faces.begin(), faces.end());
}

Cover Cover::full_nerve(int k) {
  std::vector<int> opens(k);
  std::vector<std::pair<int, int>> doubles;
  std::vector<std::vector<int>> triples;
  for (int a = 0; a < k; ++a) {
    opens[a] = a + 1;
    for (int b = a + 1; b < k; ++b) {
      doubles.push_back({a + 1, b + 1});
      for (int c = b + 1; c < k; ++c) triples.push_back({a + 1, b + 1, c + 1});
    }
  }
  return Cover(std::move(opens), std::move(doubles), std::move(triples));
}

Cover Cover::circle() { return Cover({1, 2, 3}, {{1, 2}, {2, 3}, {1, 3}}, {}); }

int Cover::edge_index(int i, int j) const {
  std::pair<int, int> key{std::min(i, j), std::max(i, j)};
  auto it = std::lower_bound(doubles_.begin(), doubles_.end(), key);
  if (it == doubles_.end() || *it != key) return -1;
  return static_cast<int>(it - doubles_.begin());
}

bool Cover::is_connected() const {
  if (size() == 0) return true;
  std::vector<int> parent(size());
  for (int p = 0; p < size(); ++p) parent[p] = p;
  auto find = [&](int p) {
    while (parent[p] != p) p = parent[p] = parent[parent[p]];
    return p;
  };
  int components = size();
  for (auto [i, j] : doubles_) {
    int a = find(i), b = find(j);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

Cover Cover::relabeled(const std::vector<int>& perm) const {
  std::vector<int> opens(size());
  for (int p = 0; p < size(); ++p) opens[perm[p]] = opens_[p];
  std::vector<std::pair<int, int>> doubles;
  for (auto [i, j] : doubles_) doubles.push_back({opens_[i], opens_[j]});
  std::vector<std::vector<int>> triples;
  for (const auto& t : triples_) triples.push_back({opens_[t[0]], opens_[t[1]], opens_[t[2]]});
  return Cover(std::move(opens), std::move(doubles), std::move(triples));
}

DescentDatum trivial_datum(const Cover& cover, const CrossedModule& cm) {
  return DescentDatum{std::vector<int>(cover.size(), cm.g_zero.identity()),
                      std::vector<int>(cover.doubles().size(), cm.g_minus1.identity())};
}

int h_at(const Cover& cover, const CrossedModule& cm, const DescentDatum& datum, int i, int j) {
  if (i == j) return cm.g_minus1.identity();
  int e = cover.edge_index(i, j);
  if (e < 0) throw Error(ErrorKind::SchemaError, "no double on these opens");
  return i < j ? datum.h[e] : cm.g_minus1.inverse(datum.h[e]);
}

std::vector<std::string> validate_descent(const Cover& cover, const CrossedModule& cm,
                                          const DescentDatum& datum) {
  std::vector<std::string> failures;
  if (static_cast<int>(datum.g.size()) != cover.size() ||
      datum.h.size() != cover.doubles().size()) {
    failures.push_back("datum does not match the cover");
    return failures;
  }
  const FiniteGroup& g0 = cm.g_zero;
  const FiniteGroup& g1 = cm.g_minus1;
  for (int v : datum.g) {
    if (v < 0 || v >= g0.order()) failures.push_back("g outside G^0");
  }
  for (int v : datum.h) {
    if (v < 0 || v >= g1.order()) failures.push_back("h outside G^-1");
  }
  if (!failures.empty()) return failures;
  auto name = [&](int p) { return std::to_string(cover.opens()[p]); };
  for (std::size_t e = 0; e < cover.doubles().size(); ++e) {
    auto [i, j] = cover.doubles()[e];
    if (datum.g[i] != g0.mul(cm.d[datum.h[e]], datum.g[j])) {
      failures.push_back("edge (" + name(i) + ", " + name(j) + "): g_i != d(h_ij) g_j");
    }
  }
  for (const auto& t : cover.triples()) {
    int hij = h_at(cover, cm, datum, t[0], t[1]);
    int hjk = h_at(cover, cm, datum, t[1], t[2]);
    int hik = h_at(cover, cm, datum, t[0], t[2]);
    if (g1.mul(hij, hjk) != hik) {
      failures.push_back("triple (" + name(t[0]) + ", " + name(t[1]) + ", " + name(t[2]) +
                         "): h_ij h_jk != h_ik");
    }
  }
  return failures;
}

namespace {

bool edge_compatible(const CrossedModule& cm, int h1, int h2, int ki, int kj) {
  const FiniteGroup& g1 = cm.g_minus1;
  return g1.mul(h2, kj) == g1.mul(ki, h1);
}

// Calls visit(k) for every tuple in (G^-1)^n, first open varying slowest.
template <class Visit>
void for_each_tuple(int n, int base, Visit&& visit) {
  std::vector<int> k(n, 0);
  for (;;) {
    visit(k);
    int p = n - 1;
    while (p >= 0 && ++k[p] == base) k[p--] = 0;
    if (p < 0) return;
  }
}

}  // namespace

std::vector<std::vector<int>> descent_morphisms(const Cover& cover, const CrossedModule& cm,
                                                const DescentDatum& from, const DescentDatum& to) {
  const int n = cover.size();
  std::vector<std::vector<int>> candidates(n);
  for (int i = 0; i < n; ++i) {
    int needed = cm.g_zero.mul(to.g[i], cm.g_zero.inverse(from.g[i]));
    for (int k = 0; k < cm.g_minus1.order(); ++k) {
      if (cm.d[k] == needed) candidates[i].push_back(k);
    }
  }
  // edges checked as soon as their later open is assigned
  std::vector<std::vector<int>> closing(n);
  for (std::size_t e = 0; e < cover.doubles().size(); ++e) {
    closing[cover.doubles()[e].second].push_back(static_cast<int>(e));
  }
  std::vector<std::vector<int>> found;
  std::vector<int> k(n, -1);
  auto search = [&](auto&& self, int i) -> void {
    if (i == n) {
      found.push_back(k);
      return;
    }
    for (int c : candidates[i]) {
      k[i] = c;
      bool ok = true;
      for (int e : closing[i]) {
        auto [a, b] = cover.doubles()[e];
        if (!edge_compatible(cm, from.h[e], to.h[e], k[a], k[b])) {
          ok = false;
          break;
        }
      }
      if (ok) self(self, i + 1);
    }
    k[i] = -1;
  };
  search(search, 0);
  return found;
}

DescentDatum gauge(const Cover& cover, const CrossedModule& cm, const DescentDatum& from,
                   const std::vector<int>& k) {
  DescentDatum out = from;
  for (int i = 0; i < cover.size(); ++i) out.g[i] = cm.g_zero.mul(cm.d[k[i]], from.g[i]);
  const FiniteGroup& g1 = cm.g_minus1;
  for (std::size_t e = 0; e < cover.doubles().size(); ++e) {
    auto [i, j] = cover.doubles()[e];
    out.h[e] = g1.mul(g1.mul(k[i], from.h[e]), g1.inverse(k[j]));
  }
  return out;
}

std::uint64_t search_size(const Cover& cover, const CrossedModule& cm) {
  constexpr std::uint64_t cap = ~std::uint64_t{0};
  std::uint64_t size = 1;
  auto times = [&](std::uint64_t f) {
    size = (f != 0 && size > cap / f) ? cap : size * f;
  };
  for (int i = 0; i < cover.size(); ++i) times(static_cast<std::uint64_t>(cm.g_zero.order()));
  for (std::size_t e = 0; e < cover.doubles().size(); ++e) {
    times(static_cast<std::uint64_t>(cm.g_minus1.order()));
  }
  return size;
}

namespace {

// Valid data whose g-assignment index lies in [start, stop), in
// lexicographic order.
std::vector<DescentDatum> valid_data_in(const Cover& cover, const CrossedModule& cm,
                                        const std::vector<std::vector<int>>& preimage,
                                        std::uint64_t start, std::uint64_t stop) {
  const int n = cover.size();
  const auto& doubles = cover.doubles();
  const int m = static_cast<int>(doubles.size());
  const int base = cm.g_zero.order();
  const FiniteGroup& g1 = cm.g_minus1;
  std::vector<std::vector<int>> closing(m);
  for (const auto& t : cover.triples()) {
    // all three edges are set once the largest edge index is set
    int ab = cover.edge_index(t[0], t[1]);
    int bc = cover.edge_index(t[1], t[2]);
    int ac = cover.edge_index(t[0], t[2]);
    closing[std::max({ab, bc, ac})].push_back(static_cast<int>(&t - cover.triples().data()));
  }
  std::vector<DescentDatum> out;
  DescentDatum datum{std::vector<int>(n), std::vector<int>(m)};
  std::vector<const std::vector<int>*> allowed(m);
  for (std::uint64_t index = start; index < stop; ++index) {
    std::uint64_t rest = index;
    for (int i = n - 1; i >= 0; --i) {
      datum.g[i] = static_cast<int>(rest % base);
      rest /= base;
    }
    bool possible = true;
    for (int e = 0; e < m && possible; ++e) {
      auto [i, j] = doubles[e];
      int needed = cm.g_zero.mul(datum.g[i], cm.g_zero.inverse(datum.g[j]));
      allowed[e] = &preimage[needed];
      possible = !allowed[e]->empty();
    }
    if (!possible) continue;
    auto search = [&](auto&& self, int e) -> void {
      if (e == m) {
        out.push_back(datum);
        return;
      }
      for (int h : *allowed[e]) {
        datum.h[e] = h;
        bool ok = true;
        for (int t : closing[e]) {
          const auto& f = cover.triples()[t];
          int hab = datum.h[cover.edge_index(f[0], f[1])];
          int hbc = datum.h[cover.edge_index(f[1], f[2])];
          int hac = datum.h[cover.edge_index(f[0], f[2])];
          if (g1.mul(hab, hbc) != hac) {
            ok = false;
            break;
          }
        }
        if (ok) self(self, e + 1);
      }
    };
    search(search, 0);
  }
  return out;
}

}  // namespace

H1Classification classify_h1(const Cover& cover, const CrossedModule& cm, std::uint64_t budget) {
  H1Classification result;
  result.search_size = search_size(cover, cm);
  if (result.search_size > budget) throw BudgetExceeded(result.search_size, budget);

  std::vector<std::vector<int>> preimage(cm.g_zero.order());
  for (int h = 0; h < cm.g_minus1.order(); ++h) preimage[cm.d[h]].push_back(h);

  std::uint64_t assignments = 1;
  for (int i = 0; i < cover.size(); ++i) assignments *= cm.g_zero.order();
  const std::uint64_t slices = std::min<std::uint64_t>(assignments, 256);
  std::vector<std::vector<DescentDatum>> parts(slices);
  parallel_for(slices, [&](std::size_t s) {
    parts[s] = valid_data_in(cover, cm, preimage, assignments * s / slices,
                             assignments * (s + 1) / slices);
  });
  std::vector<DescentDatum> data;
  for (auto& part : parts) {
    data.insert(data.end(), std::make_move_iterator(part.begin()),
                std::make_move_iterator(part.end()));
  }
  std::sort(data.begin(), data.end());
  result.valid_data = data.size();

  std::vector<int> class_of(data.size(), -1);
  auto position = [&](const DescentDatum& d) {
    return static_cast<std::size_t>(std::lower_bound(data.begin(), data.end(), d) -
                                    data.begin());
  };
  const DescentDatum pointed = trivial_datum(cover, cm);
  for (std::size_t r = 0; r < data.size(); ++r) {
    if (class_of[r] >= 0) continue;
    const int id = static_cast<int>(result.classes.size());
    H1Class cls{data[r], 0, 0};
    for_each_tuple(cover.size(), cm.g_minus1.order(), [&](const std::vector<int>& k) {
      const std::size_t p = position(gauge(cover, cm, data[r], k));
      if (p == r) ++cls.automorphisms;
      if (class_of[p] < 0) {
        class_of[p] = id;
        ++cls.size;
      }
    });
    result.classes.push_back(std::move(cls));
  }
  result.pointed_class_index = class_of[position(pointed)];
  result.classes[result.pointed_class_index].representative = pointed;
  return result;
}

}  // namespace mdcalc::xm
