#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "parorb/block_structure.hpp"
#include "parorb/link_pattern.hpp"
#include "parorb/matrix.hpp"

namespace parorb::testing {

/// Class from arrows (source block, target block), 1-based.
inline EnhancedOLP eolp(const std::vector<int>& blocks, const std::vector<std::pair<int, int>>& arrows) {
  BlockStructure bs(blocks);
  std::vector<std::vector<int>> counts(bs.p(), std::vector<int>(bs.p(), 0));
  for (auto [s, t] : arrows) ++counts[t - 1][s - 1];
  return eolp_from_counts(bs, counts);
}

/// Upper triangular with nonzero diagonal, small integer entries.
inline Matrix random_upper(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> off(-5, 5);
  std::uniform_int_distribution<int> diag(1, 4);
  std::bernoulli_distribution sign(0.5);
  Matrix g(n, n);
  for (int i = 0; i < n; ++i) {
    g(i, i) = diag(rng) * (sign(rng) ? 1 : -1);
    for (int j = i + 1; j < n; ++j) g(i, j) = off(rng);
  }
  return g;
}

inline int dim_p(const BlockStructure& b) { return b.parabolic_dim(); }

}  // namespace parorb::testing
