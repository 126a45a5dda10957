#pragma once

#include <vector>

namespace mdcalc {

// Visits every alpha in N^n with |alpha| <= max_total and alpha_i <= caps[i]
// (a negative cap means unbounded), in graded order: all |alpha| = 0, then
// |alpha| = 1, and so on. The callback receives (alpha, |alpha|).
template <class F>
void for_each_multi_index(int n, int max_total, const std::vector<int>& caps, F&& visit) {
  std::vector<int> alpha(n, 0);
  auto fill = [&](auto&& self, int var, int remaining, int total) -> void {
    if (var == n - 1) {
      if (caps[var] >= 0 && remaining > caps[var]) return;
      alpha[var] = remaining;
      visit(alpha, total);
      alpha[var] = 0;
      return;
    }
    const int limit = caps[var] >= 0 ? std::min(remaining, caps[var]) : remaining;
    for (int a = limit; a >= 0; --a) {
      alpha[var] = a;
      self(self, var + 1, remaining - a, total);
    }
    alpha[var] = 0;
  };
  for (int total = 0; total <= max_total; ++total) fill(fill, 0, total, total);
}

}  // namespace mdcalc
