// Reference decomposition of the standard module for d <= 5, embedded so the
// tool is self-contained offline.  One row per isotypic block, sorted by
// (t, m2) within each d.
#pragma once

#include <vector>

#include "twalg/decomposition.hpp"

namespace twalg {

struct GoldenBlock {
  int d;
  TypeTriple hwv_type;
  Weight weight;
  long long dim;
  long long mult;
};

inline const std::vector<GoldenBlock>& reference_decomposition_table() {
  static const std::vector<GoldenBlock> table = {
      {1, {1, 0, 0}, {1, 0}, 3, 1},

      {2, {2, 0, 0}, {2, 0}, 6, 1},
      {2, {1, 1, 0}, {0, 1}, 3, 1},

      {3, {3, 0, 0}, {3, 0}, 10, 1},
      {3, {2, 1, 0}, {1, 1}, 8, 2},
      {3, {1, 1, 1}, {0, 0}, 1, 1},

      {4, {4, 0, 0}, {4, 0}, 15, 1},
      {4, {3, 1, 0}, {2, 1}, 15, 3},
      {4, {2, 2, 0}, {0, 2}, 6, 2},
      {4, {2, 1, 1}, {1, 0}, 3, 3},

      {5, {5, 0, 0}, {5, 0}, 21, 1},
      {5, {4, 1, 0}, {3, 1}, 24, 4},
      {5, {3, 2, 0}, {1, 2}, 15, 5},
      {5, {3, 1, 1}, {2, 0}, 6, 6},
      {5, {2, 2, 1}, {0, 1}, 3, 5},
  };
  return table;
}

inline std::vector<GoldenBlock> reference_decomposition(int d) {
  std::vector<GoldenBlock> out;
  for (const auto& row : reference_decomposition_table())
    if (row.d == d) out.push_back(row);
  return out;
}

}  // namespace twalg
