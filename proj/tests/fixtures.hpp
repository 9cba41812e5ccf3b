#pragma once

#include <string>
#include <vector>

#include "coordlat/latt.hpp"

namespace fixture {

using coordlat::FiniteLattice;

// Lattices built straight from an order relation, given as "a <= b" pairs
// (reflexivity and transitivity are added here).
inline FiniteLattice from_pairs(std::size_t n, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<char> leq(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) leq[i * n + i] = 1;
  for (auto [a, b] : pairs) leq[a * n + b] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (leq[i * n + k] && leq[k * n + j]) leq[i * n + j] = 1;
  std::vector<std::string> keys;
  for (std::size_t i = 0; i < n; ++i) keys.push_back("x" + std::to_string(i));
  return FiniteLattice::from_order(keys, leq);
}

inline FiniteLattice chain(std::size_t n) {
  std::vector<std::pair<int, int>> p;
  for (std::size_t i = 0; i + 1 < n; ++i) p.emplace_back(static_cast<int>(i), static_cast<int>(i + 1));
  return from_pairs(n, p);
}

// 0 bottom, 1..3 atoms, 4 top.
inline FiniteLattice diamond() { return from_pairs(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}); }

// 0 < 1 < 2 < 4 and 0 < 3 < 4.
inline FiniteLattice pentagon() { return from_pairs(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}}); }

inline FiniteLattice boolean_square() { return from_pairs(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}); }

}  // namespace fixture
