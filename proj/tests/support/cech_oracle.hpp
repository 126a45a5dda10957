#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

// Simplicial cohomology of a nerve with Z/p coefficients by Gaussian
// elimination. Independent of the descent-data search.
namespace oracle {

struct Nerve {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;        // i < j
  std::vector<std::array<int, 3>> faces;         // i < j < k
};

int rank_mod_p(std::vector<std::vector<long>> rows, long p);

/// dim H^0 and dim H^1 over Z/p.
int h0_dimension(const Nerve& nerve, long p);
int h1_dimension(const Nerve& nerve, long p);

std::uint64_t power(std::uint64_t base, int exponent);

}  // namespace oracle
