// Test-only oracles, kept independent of the library code paths they check.
#pragma once

#include <deque>
#include <random>
#include <vector>

#include "twalg/sparse.hpp"

namespace oracles {

// Directed BFS distances in H*(d,3) from every vertex, built from the arc
// rule alone: an arc increments exactly one base-3 digit.
inline std::vector<std::vector<int>> bfs_all_pairs(int d) {
  const long long n = [&] {
    long long p = 1;
    for (int i = 0; i < d; ++i) p *= 3;
    return p;
  }();
  std::vector<std::vector<long long>> succ(static_cast<std::size_t>(n));
  for (long long x = 0; x < n; ++x) {
    long long place = n / 3;
    for (int p = 0; p < d; ++p, place /= 3) {
      long long digit = (x / place) % 3;
      succ[static_cast<std::size_t>(x)].push_back(x + (digit == 2 ? -2 * place : place));
    }
  }
  std::vector<std::vector<int>> dist(static_cast<std::size_t>(n),
                                     std::vector<int>(static_cast<std::size_t>(n), -1));
  for (long long src = 0; src < n; ++src) {
    auto& row = dist[static_cast<std::size_t>(src)];
    row[static_cast<std::size_t>(src)] = 0;
    std::deque<long long> queue{src};
    while (!queue.empty()) {
      long long x = queue.front();
      queue.pop_front();
      for (long long y : succ[static_cast<std::size_t>(x)])
        if (row[static_cast<std::size_t>(y)] < 0) {
          row[static_cast<std::size_t>(y)] = row[static_cast<std::size_t>(x)] + 1;
          queue.push_back(y);
        }
    }
  }
  return dist;
}

// Deterministic small random matrices for property tests.
struct Rng {
  std::mt19937_64 gen;
  explicit Rng(unsigned long seed) : gen(seed) {}

  int small_int(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(gen);
  }

  twalg::SparseMatrix matrix(twalg::index_t nrows, twalg::index_t ncols) {
    twalg::SparseMatrix m(nrows, ncols);
    for (twalg::index_t i = 0; i < nrows; ++i)
      for (twalg::index_t j = 0; j < ncols; ++j)
        if (small_int(0, 2) == 0) m.add_at(i, j, twalg::rat(small_int(-3, 3)));
    return m;
  }
};

}  // namespace oracles
