#include "support/cech_oracle.hpp"

#include <algorithm>

namespace oracle {

int rank_mod_p(std::vector<std::vector<long>> rows, long p) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  auto inverse = [p](long a) {
    long result = 1, base = a % p, e = p - 2;
    while (e > 0) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return result;
  };
  int rank = 0;
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    auto pivot = std::find_if(rows.begin() + rank, rows.end(),
                              [&](const auto& r) { return ((r[c] % p) + p) % p != 0; });
    if (pivot == rows.end()) continue;
    std::swap(*pivot, rows[rank]);
    const long inv = inverse(((rows[rank][c] % p) + p) % p);
    for (auto& v : rows[rank]) v = ((v * inv) % p + p) % p;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (static_cast<int>(r) == rank) continue;
      const long f = ((rows[r][c] % p) + p) % p;
      if (f == 0) continue;
      for (std::size_t k = 0; k < cols; ++k) {
        rows[r][k] = ((rows[r][k] - f * rows[rank][k]) % p + p) % p;
      }
    }
    ++rank;
  }
  return rank;
}

namespace {

// coboundary C^0 -> C^1: (df)(i,j) = f(j) - f(i)
std::vector<std::vector<long>> delta0(const Nerve& n) {
  std::vector<std::vector<long>> m(n.edges.size(), std::vector<long>(n.vertices, 0));
  for (std::size_t e = 0; e < n.edges.size(); ++e) {
    m[e][n.edges[e].first] -= 1;
    m[e][n.edges[e].second] += 1;
  }
  return m;
}

// coboundary C^1 -> C^2: (dc)(i,j,k) = c(j,k) - c(i,k) + c(i,j)
std::vector<std::vector<long>> delta1(const Nerve& n) {
  std::vector<std::vector<long>> m(n.faces.size(), std::vector<long>(n.edges.size(), 0));
  auto index = [&](int a, int b) {
    return std::find(n.edges.begin(), n.edges.end(), std::pair{a, b}) - n.edges.begin();
  };
  for (std::size_t f = 0; f < n.faces.size(); ++f) {
    auto [i, j, k] = n.faces[f];
    m[f][index(j, k)] += 1;
    m[f][index(i, k)] -= 1;
    m[f][index(i, j)] += 1;
  }
  return m;
}

}  // namespace

int h0_dimension(const Nerve& nerve, long p) {
  return nerve.vertices - (nerve.edges.empty() ? 0 : rank_mod_p(delta0(nerve), p));
}

int h1_dimension(const Nerve& nerve, long p) {
  const int edges = static_cast<int>(nerve.edges.size());
  const int r1 = nerve.faces.empty() || edges == 0 ? 0 : rank_mod_p(delta1(nerve), p);
  const int r0 = edges == 0 ? 0 : rank_mod_p(delta0(nerve), p);
  return edges - r1 - r0;
}

std::uint64_t power(std::uint64_t base, int exponent) {
  std::uint64_t r = 1;
  while (exponent-- > 0) r *= base;
  return r;
}

}  // namespace oracle
