// Decomposition of the standard module of H*(d,3) into irreducible
// sl3-modules.
//
// A highest weight vector in the shell X_[s,t] is an exact kernel element of
// the stacked lowering operators L1, L2 restricted to that shell.  From each
// one, the raised vectors R3^k R2^j R1^i v over the index box
//   0 <= i <= m1,  0 <= j <= m2,  0 <= k <= m1 + m2 - i - j
// form a basis of the generated module; multiplicities are exact nullities,
// never formula values.
#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "twalg/operators.hpp"
#include "twalg/parallel.hpp"
#include "twalg/rowspace.hpp"

namespace twalg {

struct Weight {
  long m1 = 0;
  long m2 = 0;
  friend bool operator==(const Weight&, const Weight&) = default;
};

struct IrreducibleBlock {
  TypeTriple hwv_type;  // (r, s, t) of the highest weight vector, r >= s >= t
  Weight weight;
  long long dim = 0;
  long long mult = 0;
  friend bool operator==(const IrreducibleBlock&, const IrreducibleBlock&) = default;
};

struct DecompositionReport {
  int d = 0;
  std::vector<IrreducibleBlock> blocks;  // sorted by (t, m2)
  long long total = 0;                   // sum of dim * mult == 3^d
};

// dim W = (m1+1)(m2+1)(m1+m2+2) / 2, always an integer.
inline long long dim_formula(const Weight& w) {
  if (w.m1 < 0 || w.m2 < 0) throw DomainError("dim_formula: weight entries must be nonnegative");
  return (w.m1 + 1) * (w.m2 + 1) * (w.m1 + w.m2 + 2) / 2;
}

namespace detail {

inline SparseVec embed_shell_vector(const SparseVec& v, const std::vector<index_t>& shell,
                                    index_t full_dim) {
  SparseVec out(full_dim);
  out.ent.reserve(v.ent.size());
  for (const auto& [pos, val] : v.ent) out.ent.emplace_back(shell[static_cast<std::size_t>(pos)], val);
  return out;
}

// L1, L2 restricted to the shell (s, t); rows are the image shells (s-1, t)
// and (s+1, t-1).  The weight grading puts every image inside those shells,
// so nothing is lost by the restriction.
inline SparseMatrix stacked_lowering(const OperatorSet& ops, int s, int t,
                                     const std::vector<index_t>& shell) {
  std::vector<index_t> img1 = shell_vertices(ops.d, s - 1, t);
  std::vector<index_t> img2 = shell_vertices(ops.d, s + 1, t - 1);
  return vstack(submatrix(ops.l1, img1, shell), submatrix(ops.l2, img2, shell));
}

}  // namespace detail

// Exact basis of {v in V_[s,t] : L1 v = L2 v = 0}, embedded in the full
// 3^d-dimensional space.  The reduced-echelon kernel fixes representatives
// deterministically.
inline std::vector<SparseVec> highest_weight_vectors(const OperatorSet& ops, int s, int t) {
  if (s < 0 || t < 0 || s + t > ops.d)
    throw DomainError("highest_weight_vectors: invalid shell (s,t)");
  const std::vector<index_t> shell = shell_vertices(ops.d, s, t);
  const index_t n = pow3(ops.d);
  std::vector<SparseVec> out;
  for (const SparseVec& k : nullspace_basis(detail::stacked_lowering(ops, s, t, shell)))
    out.push_back(detail::embed_shell_vector(k, shell, n));
  return out;
}

inline std::vector<SparseVec> highest_weight_vectors(int d, int s, int t) {
  return highest_weight_vectors(build_operators(d), s, t);
}

// The exact (H1, H2) eigenvalue pair of a vector supported on one shell.
inline Weight weight_of(const SparseVec& v, const OperatorSet& ops) {
  if (v.is_zero()) throw PreconditionError("weight_of: zero vector has no weight");
  TypeTriple c = census(v.ent.front().first, ops.d);
  for (const auto& [idx, val] : v.ent)
    if (!(census(idx, ops.d) == c))
      throw PreconditionError("weight_of: vector is not supported on a single shell");
  return {c.r - c.s, c.s - c.t};
}

namespace detail {

inline bool is_highest_weight(const SparseVec& v, const OperatorSet& ops) {
  return !v.is_zero() && (ops.l1 * v).is_zero() && (ops.l2 * v).is_zero();
}

// Raised family R3^k R2^j R1^i v over a given (R1-bound, R2-bound) box.
inline std::vector<SparseVec> raised_box(const SparseVec& v, const OperatorSet& ops, long bound1,
                                         long bound2, long ksum) {
  std::vector<SparseVec> out;
  SparseVec ui = v;
  for (long i = 0; i <= bound1; ++i) {
    if (i > 0) ui = ops.r1 * ui;
    SparseVec uij = ui;
    for (long j = 0; j <= bound2; ++j) {
      if (j > 0) uij = ops.r2 * uij;
      SparseVec uijk = uij;
      for (long k = 0; k <= ksum - i - j; ++k) {
        if (k > 0) uijk = ops.r3 * uijk;
        out.push_back(uijk);
      }
    }
  }
  return out;
}

}  // namespace detail

// Basis
//   { R3^k R2^j R1^i v : 0 <= i <= m1, 0 <= j <= m2, 0 <= k <= m1+m2-i-j }
// of the irreducible module generated by the highest weight vector v,
// verified linearly independent by exact rank.
inline std::vector<SparseVec> irreducible_basis(const SparseVec& v, const OperatorSet& ops) {
  if (!detail::is_highest_weight(v, ops))
    throw PreconditionError("irreducible_basis: v is not a highest weight vector");
  const Weight w = weight_of(v, ops);
  std::vector<SparseVec> vecs = detail::raised_box(v, ops, w.m1, w.m2, w.m1 + w.m2);
  const long long dim = dim_formula(w);
  if (static_cast<long long>(vecs.size()) != dim)
    throw IntegrityError("irreducible_basis: index box size disagrees with the dimension formula");
  RowSpace rs(v.dim);
  for (const auto& b : vecs) rs.insert(b);
  if (rs.rank() != dim)
    throw IntegrityError("irreducible_basis: raised family is rank deficient (" +
                         std::to_string(rs.rank()) + " of " + std::to_string(dim) + ")");
  return vecs;
}

// Full decomposition of the standard module: iterate the admissible (t, m2)
// range, read multiplicities off exact nullities, and check the dimension
// partition sum dim * mult = 3^d.
inline DecompositionReport decompose(int d, int max_threads = 1) {
  if (d < 1) throw DomainError("decompose: need d >= 1");
  const OperatorSet ops = build_operators(d);
  std::vector<std::pair<int, int>> keys;  // (t, m2)
  for (int t = 0; 3 * t <= d; ++t)
    for (int m2 = 0; 2 * m2 <= d - 3 * t; ++m2) keys.emplace_back(t, m2);

  std::vector<IrreducibleBlock> blocks(keys.size());
  parallel_for(keys.size(), max_threads, [&](std::size_t q) {
    const auto [t, m2] = keys[q];
    const int s = m2 + t;
    const long m1 = d - 3 * t - 2 * m2;
    IrreducibleBlock b;
    b.hwv_type = {static_cast<int>(m1) + m2 + t, m2 + t, t};
    b.weight = {m1, m2};
    b.dim = dim_formula(b.weight);
    b.mult = static_cast<long long>(highest_weight_vectors(ops, s, t).size());
    blocks[q] = b;
  });

  DecompositionReport rep;
  rep.d = d;
  for (auto& b : blocks) {
    if (b.mult == 0) continue;
    rep.total += b.dim * b.mult;
    rep.blocks.push_back(std::move(b));
  }
  if (rep.total != pow3(d))
    throw IntegrityError("decompose: dimension partition failed at d=" + std::to_string(d));
  return rep;
}

// Recursive highest weight vector of type (r, s, t), r >= s >= t: tensoring
// the two-letter block e_10 - e_01 raises s, the alternating three-letter
// block raises t.
inline SparseVec build_hwv_recursive(int d, int s, int t) {
  const int r = d - s - t;
  if (t < 0 || s < t || r < s) throw DomainError("build_hwv_recursive: need r >= s >= t >= 0");
  check_size_cap(d);
  std::function<SparseVec(int, int, int)> rec = [&](int dd, int ss, int tt) -> SparseVec {
    if (tt > 0) {
      SparseVec block(27);
      block.ent = {{5, rat(1)},   // 012
                   {7, rat(-1)},  // 021
                   {11, rat(-1)}, // 102
                   {15, rat(1)},  // 120
                   {19, rat(1)},  // 201
                   {21, rat(-1)}};// 210
      return vec_kron(block, rec(dd - 3, ss - 1, tt - 1));
    }
    if (ss > 0) {
      SparseVec block(9);
      block.ent = {{1, rat(-1)}, {3, rat(1)}};  // e_10 - e_01
      return vec_kron(block, rec(dd - 2, ss - 1, 0));
    }
    return SparseVec::unit(pow3(dd), 0);  // base-vertex indicator
  };
  SparseVec v = rec(d, s, t);
  if (d >= 1) {
    const OperatorSet ops = build_operators(d);
    if (!detail::is_highest_weight(v, ops))
      throw IntegrityError("build_hwv_recursive: constructed vector is not annihilated by L1, L2");
  }
  return v;
}

// ---------------------------------------------------------------------------
// Complete reducibility at scale

struct ReducibilityCheck {
  long long vector_count = 0;
  long long rank = 0;
  bool complete = false;  // rank == 3^d
};

// Concatenates the irreducible bases of every module copy and computes the
// exact rank of the union.  Each raised vector sits in a single shell, so the
// global rank splits as a sum of per-shell ranks over disjoint coordinates.
inline ReducibilityCheck complete_reducibility(int d, int max_threads = 1) {
  const OperatorSet ops = build_operators(d);
  std::vector<std::pair<int, int>> keys;
  for (int t = 0; 3 * t <= d; ++t)
    for (int m2 = 0; 2 * m2 <= d - 3 * t; ++m2) keys.emplace_back(t, m2);

  // produced[q] = all basis vectors of every module copy in block q
  std::vector<std::vector<SparseVec>> produced(keys.size());
  parallel_for(keys.size(), max_threads, [&](std::size_t q) {
    const auto [t, m2] = keys[q];
    for (const SparseVec& v : highest_weight_vectors(ops, m2 + t, t))
      for (SparseVec& b : irreducible_basis(v, ops)) produced[q].push_back(std::move(b));
  });

  std::map<std::pair<int, int>, std::vector<const SparseVec*>> by_shell;
  long long count = 0;
  for (const auto& vecs : produced)
    for (const SparseVec& b : vecs) {
      TypeTriple c = census(b.ent.front().first, d);
      for (const auto& [idx, val] : b.ent)
        if (!(census(idx, d) == c))
          throw IntegrityError("complete_reducibility: raised vector leaves its shell");
      by_shell[{c.s, c.t}].push_back(&b);
      ++count;
    }

  std::vector<std::pair<std::pair<int, int>, std::vector<const SparseVec*>>> work(
      by_shell.begin(), by_shell.end());
  std::vector<long long> ranks(work.size(), 0);
  parallel_for(work.size(), max_threads, [&](std::size_t q) {
    const auto& [key, members] = work[q];
    const std::vector<index_t> shell = shell_vertices(d, key.first, key.second);
    std::map<index_t, index_t> pos;
    for (std::size_t p = 0; p < shell.size(); ++p) pos[shell[p]] = static_cast<index_t>(p);
    RowSpace rs(static_cast<index_t>(shell.size()));
    for (const SparseVec* b : members) {
      SparseVec local(static_cast<index_t>(shell.size()));
      local.ent.reserve(b->ent.size());
      for (const auto& [idx, val] : b->ent) local.ent.emplace_back(pos.at(idx), val);
      rs.insert(local);
    }
    ranks[q] = rs.rank();
  });

  ReducibilityCheck out;
  out.vector_count = count;
  for (long long r : ranks) out.rank += r;
  out.complete = out.rank == pow3(d);
  return out;
}

// ---------------------------------------------------------------------------
// Index-box adjudication

struct IndexBoxAdjudication {
  bool r1_bound_m1_ok = false;  // box {i <= m1, j <= m2}
  bool r1_bound_m2_ok = false;  // swapped box {i <= m2, j <= m1}
  std::string detail;
};

// Tries both printed index boxes for the raised family and reports which one
// yields a full-rank basis of the right cardinality (zero vectors dropped).
inline IndexBoxAdjudication adjudicate_index_box(const SparseVec& v, const OperatorSet& ops) {
  if (!detail::is_highest_weight(v, ops))
    throw PreconditionError("adjudicate_index_box: v is not a highest weight vector");
  const Weight w = weight_of(v, ops);
  const long long dim = dim_formula(w);
  auto probe = [&](long b1, long b2) {
    RowSpace rs(v.dim);
    long long zeros = 0;
    for (const SparseVec& b : detail::raised_box(v, ops, b1, b2, w.m1 + w.m2)) {
      if (b.is_zero())
        ++zeros;
      else
        rs.insert(b);
    }
    return std::pair<long long, long long>(rs.rank(), zeros);
  };
  auto [rank_a, zeros_a] = probe(w.m1, w.m2);
  auto [rank_b, zeros_b] = probe(w.m2, w.m1);
  IndexBoxAdjudication adj;
  adj.r1_bound_m1_ok = rank_a == dim && zeros_a == 0;
  adj.r1_bound_m2_ok = rank_b == dim && zeros_b == 0;
  adj.detail = "weight (" + std::to_string(w.m1) + "," + std::to_string(w.m2) + ") dim " +
               std::to_string(dim) + ": box {i<=m1,j<=m2} rank " + std::to_string(rank_a) + ", " +
               std::to_string(zeros_a) + " zero vectors; box {i<=m2,j<=m1} rank " +
               std::to_string(rank_b) + ", " + std::to_string(zeros_b) + " zero vectors";
  return adj;
}

}  // namespace twalg
