#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "agent_view.h"

namespace ncg::detail {

// C(n, k), saturated at `cap + 1`.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k, std::uint64_t cap);

// Visits every k-subset of `pool` in lexicographic order of positions, passing
// the chosen vertices and the nearest-neighbour table of `base` merged with
// them.
template <class Visit>
void for_each_combination(const AgentView& view, std::span<const Vertex> pool,
                          std::size_t k, const std::vector<int>& base,
                          Visit&& visit) {
  if (k > pool.size()) {
    return;
  }
  std::vector<std::vector<int>> levels(k + 1, base);
  std::vector<Vertex> chosen(k);
  auto recurse = [&](auto& self, std::size_t depth, std::size_t start) -> void {
    if (depth == k) {
      visit(std::span<const Vertex>(chosen), std::span<const int>(levels[k]));
      return;
    }
    for (std::size_t i = start; i + (k - depth) <= pool.size(); ++i) {
      chosen[depth] = pool[i];
      levels[depth + 1] = levels[depth];
      view.merge(levels[depth + 1], pool[i]);
      self(self, depth + 1, i + 1);
    }
  };
  recurse(recurse, 0, 0);
}

} // namespace ncg::detail
