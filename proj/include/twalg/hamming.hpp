// The Hamming digraph H*(d,3): vertices are length-d words over {0,1,2},
// arcs increment exactly one coordinate (0 -> 1 -> 2 -> 0).  The base vertex
// is the all-zeros word.
//
// Vertex indexing is big-endian base 3: coordinate 0 is the most significant
// digit, so the first coordinate is the outermost Kronecker factor.  All
// matrices act on unit column vectors by pushing them along arcs: the entry
// at (x + e_i, x) is 1.
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "twalg/config.hpp"
#include "twalg/errors.hpp"
#include "twalg/sparse.hpp"

namespace twalg {

using Vertex = std::vector<std::uint8_t>;  // digits in {0,1,2}

struct TypeTriple {
  int r = 0;  // zeros
  int s = 0;  // ones
  int t = 0;  // twos
  friend bool operator==(const TypeTriple&, const TypeTriple&) = default;
};

struct TwoWayDistance {
  int forward = 0;   // number of arcs x -> y
  int backward = 0;  // number of arcs y -> x
  friend bool operator==(const TwoWayDistance&, const TwoWayDistance&) = default;
};

inline index_t pow3(int d) {
  index_t p = 1;
  for (int i = 0; i < d; ++i) p *= 3;
  return p;
}

inline index_t index_of(const Vertex& v) {
  index_t idx = 0;
  for (std::uint8_t c : v) {
    if (c > 2) throw DomainError("index_of: digit out of range");
    idx = idx * 3 + c;
  }
  return idx;
}

inline Vertex vertex_of(index_t index, int d) {
  if (index < 0 || index >= pow3(d)) throw DomainError("vertex_of: index out of range");
  Vertex v(static_cast<std::size_t>(d));
  for (int p = d - 1; p >= 0; --p) {
    v[static_cast<std::size_t>(p)] = static_cast<std::uint8_t>(index % 3);
    index /= 3;
  }
  return v;
}

inline Vertex vertex_from_string(const std::string& s) {
  Vertex v;
  v.reserve(s.size());
  for (char c : s) {
    if (c < '0' || c > '2') throw DomainError("vertex_from_string: expected digits 0/1/2");
    v.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return v;
}

inline std::string vertex_to_string(const Vertex& v) {
  std::string s;
  s.reserve(v.size());
  for (std::uint8_t c : v) s.push_back(static_cast<char>('0' + c));
  return s;
}

inline TypeTriple census(const Vertex& v) {
  TypeTriple t;
  for (std::uint8_t c : v) {
    if (c == 0)
      ++t.r;
    else if (c == 1)
      ++t.s;
    else
      ++t.t;
  }
  return t;
}

inline TypeTriple census(index_t index, int d) {
  TypeTriple t;
  for (int p = 0; p < d; ++p) {
    switch (index % 3) {
      case 0: ++t.r; break;
      case 1: ++t.s; break;
      default: ++t.t; break;
    }
    index /= 3;
  }
  return t;
}

inline void check_size_cap(int d) {
  if (d > size_cap())
    throw ResourceError("d=" + std::to_string(d) + " exceeds the size cap (" +
                        std::to_string(size_cap()) + "); set TWALG_CAP to raise it");
}

// Adjacency of H*(d,3): entry (x + e_i, x) = 1 for each coordinate i, so the
// matrix sends the unit vector at x to the sum of its out-neighbors.
inline SparseMatrix adjacency(int d) {
  if (d < 0) throw DomainError("adjacency: negative d");
  if (d == 0) return SparseMatrix(1, 1);  // empty-product convention
  check_size_cap(d);
  const index_t n = pow3(d);
  std::vector<std::tuple<index_t, index_t, Rat>> ts;
  ts.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(d));
  index_t place = n / 3;  // 3^(d-1-p) for p = 0
  std::vector<index_t> places(static_cast<std::size_t>(d));
  for (int p = 0; p < d; ++p, place /= 3) places[static_cast<std::size_t>(p)] = place;
  for (index_t x = 0; x < n; ++x) {
    for (int p = 0; p < d; ++p) {
      const index_t pl = places[static_cast<std::size_t>(p)];
      const index_t digit = (x / pl) % 3;
      const index_t succ = x + (digit == 2 ? -2 * pl : pl);
      ts.emplace_back(succ, x, rat(1));
    }
  }
  return SparseMatrix::from_triplets(n, n, ts);
}

inline TwoWayDistance two_way_distance(const Vertex& x, const Vertex& y) {
  if (x.size() != y.size()) throw ShapeError("two_way_distance: words of different length");
  int s = 0, t = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    int diff = (static_cast<int>(y[i]) - static_cast<int>(x[i]) + 3) % 3;
    if (diff == 1)
      ++s;
    else if (diff == 2)
      ++t;
  }
  return {s + 2 * t, 2 * s + t};
}

// (i, j) is realized in H*(d,3) iff it comes from a census (s, t), s + t <= d.
inline bool two_way_distance_realizable(int d, int i, int j) {
  if (i < 0 || j < 0) return false;
  if (2 * j < i || 2 * i < j) return false;
  if ((i + j) % 3 != 0) return false;
  return (i + j) / 3 <= d;
}

// |X_[s,t]| = d! / (r! s! t!)
inline long long shell_size(int d, int s, int t) {
  if (s < 0 || t < 0 || s + t > d) throw DomainError("shell_size: need s,t >= 0 and s+t <= d");
  Int v = binomial(static_cast<unsigned long>(d), static_cast<unsigned long>(s + t)) *
          binomial(static_cast<unsigned long>(s + t), static_cast<unsigned long>(s));
  return to_i64(v);
}

// Shells in (t, s) order; every (s, t) with s + t <= d appears exactly once.
inline std::vector<std::pair<int, int>> shells(int d) {
  std::vector<std::pair<int, int>> out;
  for (int t = 0; t <= d; ++t)
    for (int s = 0; s + t <= d; ++s) out.emplace_back(s, t);
  return out;
}

// Ascending indices of the vertices with census (s, t).
inline std::vector<index_t> shell_vertices(int d, int s, int t) {
  std::vector<index_t> out;
  if (s < 0 || t < 0 || s + t > d) return out;
  const index_t n = pow3(d);
  for (index_t x = 0; x < n; ++x) {
    TypeTriple c = census(x, d);
    if (c.s == s && c.t == t) out.push_back(x);
  }
  return out;
}

struct ShellProjector {
  int s = 0;
  int t = 0;
  SparseMatrix matrix;
};

// Diagonal 0/1 projector onto the shell X_[s,t]; an out-of-range (s, t)
// yields the zero matrix of the same size.
inline ShellProjector dual_idempotent(int d, int s, int t) {
  if (d < 0) throw DomainError("dual_idempotent: negative d");
  check_size_cap(d);
  const index_t n = pow3(d);
  std::vector<std::tuple<index_t, index_t, Rat>> ts;
  for (index_t x : shell_vertices(d, s, t)) ts.emplace_back(x, x, rat(1));
  return {s, t, SparseMatrix::from_triplets(n, n, ts)};
}

}  // namespace twalg
