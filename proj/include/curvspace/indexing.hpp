#pragma once

#include <array>
#include <cstddef>
#include <vector>

namespace curvspace {

/// Lexicographic enumeration of strictly increasing index pairs and triples;
/// the frozen layout for all constraint matrices and coefficient grids.
inline std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

inline std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j) {
  // requires i < j < n
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

inline std::vector<std::pair<std::size_t, std::size_t>> pair_list(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> ps;
  ps.reserve(pair_count(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) ps.emplace_back(i, j);
  return ps;
}

inline std::vector<std::array<std::size_t, 3>> triple_list(std::size_t n) {
  std::vector<std::array<std::size_t, 3>> ts;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) ts.push_back({i, j, k});
  return ts;
}

inline std::size_t triple_count(std::size_t n) {
  return n >= 3 ? n * (n - 1) * (n - 2) / 6 : 0;
}

}  // namespace curvspace
