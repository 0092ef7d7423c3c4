// Multiplicative closure: the Terwilliger algebra as an explicit linear span.
//
// algebra_span() runs a breadth-first fixed-point iteration: seed with the
// identity and the generators, multiply every newly independent element by
// every generator on both sides, reduce against the running echelon basis of
// flattened matrices, stop when the rank stabilizes.
//
// When the generator set contains a complete family of orthogonal diagonal
// idempotents, T = (sum E*) T (sum E*) splits every element into two-sided
// sandwich components with disjoint flatten supports.  The graded overload
// exploits that: components are adjoined individually and eliminated in
// per-block row spaces, which keeps every reduction inside one
// (shell x shell) block.  The final canonical basis is identical to the one
// the plain iteration produces, because canonical reduced bases of a direct
// sum of coordinate-disjoint blocks are the unions of the block bases.
#pragma once

#include <deque>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "twalg/hamming.hpp"
#include "twalg/operators.hpp"
#include "twalg/rowspace.hpp"
#include "twalg/sparse.hpp"

namespace twalg {

struct AlgebraBasis {
  index_t matrix_size = 0;  // n for n x n elements
  index_t dim = 0;
  RowSpace basis;  // canonical echelon basis of flattened matrices

  AlgebraBasis() : basis(0) {}
};

namespace detail {

inline void validate_generators(const std::vector<SparseMatrix>& gens) {
  if (gens.empty()) throw DomainError("algebra_span: empty generator list");
  const index_t n = gens.front().nrows();
  for (const auto& g : gens)
    if (g.nrows() != n || g.ncols() != n)
      throw ShapeError("algebra_span: generators must be square and of equal size");
}

}  // namespace detail

// Plain breadth-first closure.  `bound`, when nonnegative, is an upper bound
// the running rank must never exceed.
inline AlgebraBasis algebra_span(const std::vector<SparseMatrix>& gens, index_t bound = -1) {
  detail::validate_generators(gens);
  const index_t n = gens.front().nrows();
  AlgebraBasis out;
  out.matrix_size = n;
  out.basis = RowSpace(n * n);
  std::deque<SparseMatrix> frontier;
  auto adjoin = [&](const SparseMatrix& m) {
    if (out.basis.insert(flatten(m))) {
      if (bound >= 0 && out.basis.rank() > bound)
        throw IntegrityError("algebra_span: rank exceeded the stated bound " +
                             std::to_string(bound));
      frontier.push_back(m);
    }
  };
  adjoin(SparseMatrix::identity(n));
  for (const auto& g : gens) adjoin(g);
  while (!frontier.empty()) {
    SparseMatrix m = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : gens) {
      adjoin(m * g);
      adjoin(g * m);
    }
  }
  out.basis.canonicalize();
  out.dim = out.basis.rank();
  return out;
}

// Graded closure.  `idempotents` must be diagonal 0/1 matrices whose supports
// partition the index set; they are adjoined as generators.
inline AlgebraBasis algebra_span(const std::vector<SparseMatrix>& gens,
                                 const std::vector<SparseMatrix>& idempotents,
                                 index_t bound = -1) {
  detail::validate_generators(gens);
  const index_t n = gens.front().nrows();

  std::vector<int> cls(static_cast<std::size_t>(n), -1);
  for (std::size_t k = 0; k < idempotents.size(); ++k) {
    const auto& e = idempotents[k];
    if (e.nrows() != n || e.ncols() != n) throw ShapeError("algebra_span: idempotent size mismatch");
    for (index_t i = 0; i < n; ++i)
      for (const auto& [j, v] : e.row(i)) {
        if (i != j || v != 1) throw DomainError("algebra_span: idempotents must be diagonal 0/1");
        if (cls[static_cast<std::size_t>(i)] != -1)
          throw DomainError("algebra_span: idempotent supports overlap");
        cls[static_cast<std::size_t>(i)] = static_cast<int>(k);
      }
  }
  for (index_t i = 0; i < n; ++i)
    if (cls[static_cast<std::size_t>(i)] == -1)
      throw DomainError("algebra_span: idempotent supports do not cover the index set");

  std::vector<SparseMatrix> all_gens = gens;
  for (const auto& e : idempotents) all_gens.push_back(e);
  // A component has all columns in one class, so multiplying it by an
  // idempotent returns the component itself or zero; only the non-idempotent
  // generators can produce anything new.
  std::vector<const SparseMatrix*> productive;
  for (const auto& g : gens) productive.push_back(&g);

  std::map<std::pair<int, int>, RowSpace> blocks;
  index_t total_rank = 0;
  std::deque<SparseMatrix> frontier;

  auto adjoin_components = [&](const SparseMatrix& m) {
    std::map<std::pair<int, int>, std::vector<std::tuple<index_t, index_t, Rat>>> parts;
    for (index_t i = 0; i < n; ++i)
      for (const auto& [j, v] : m.row(i))
        parts[{cls[static_cast<std::size_t>(i)], cls[static_cast<std::size_t>(j)]}].emplace_back(i, j, v);
    for (auto& [key, ts] : parts) {
      SparseMatrix comp = SparseMatrix::from_triplets(n, n, ts);
      auto it = blocks.try_emplace(key, n * n).first;
      if (it->second.insert(flatten(comp))) {
        ++total_rank;
        if (bound >= 0 && total_rank > bound)
          throw IntegrityError("algebra_span: rank exceeded the stated bound " +
                               std::to_string(bound));
        frontier.push_back(std::move(comp));
      }
    }
  };

  adjoin_components(SparseMatrix::identity(n));
  for (const auto& g : all_gens) adjoin_components(g);
  while (!frontier.empty()) {
    SparseMatrix m = std::move(frontier.front());
    frontier.pop_front();
    for (const SparseMatrix* g : productive) {
      adjoin_components(m * *g);
      adjoin_components(*g * m);
    }
  }

  AlgebraBasis out;
  out.matrix_size = n;
  out.basis = RowSpace(n * n);
  for (auto& [key, rs] : blocks)
    for (const SparseVec& row : rs.basis()) out.basis.insert(row);
  out.basis.canonicalize();
  out.dim = out.basis.rank();
  return out;
}

// ---------------------------------------------------------------------------
// Terwilliger algebra of H*(d,3)

inline void check_closure_cap(int d, int cap) {
  if (d > cap)
    throw ResourceError("closure at d=" + std::to_string(d) + " exceeds the closure cap (" +
                        std::to_string(cap) + ")");
}

inline std::vector<SparseMatrix> terwilliger_generators(int d) {
  std::vector<SparseMatrix> gens;
  SparseMatrix a = adjacency(d);
  gens.push_back(a);
  gens.push_back(a.transpose());
  return gens;
}

inline std::vector<SparseMatrix> dual_idempotent_family(int d) {
  std::vector<SparseMatrix> es;
  for (auto [s, t] : shells(d)) es.push_back(dual_idempotent(d, s, t).matrix);
  return es;
}

// Closure basis over {A, A^T} and the full dual idempotent family.
inline AlgebraBasis terwilliger_algebra(int d, int cap = kDefaultClosureCap) {
  if (d < 1) throw DomainError("terwilliger_algebra: need d >= 1");
  check_closure_cap(d, cap);
  const index_t bound = to_i64(binomial(static_cast<unsigned long>(d) + 8, 8));
  return algebra_span(terwilliger_generators(d), dual_idempotent_family(d), bound);
}

inline index_t terwilliger_dim(int d, int cap = kDefaultClosureCap) {
  return terwilliger_algebra(d, cap).dim;
}

// C[A] contains A^T: membership of flatten(A^T) in the span of the powers
// A^0, ..., A^K with K the number of two-way distance classes.
inline bool check_bose_mesner(int d, int cap = kDefaultClosureCap) {
  if (d < 1) throw DomainError("check_bose_mesner: need d >= 1");
  check_closure_cap(d, cap);
  const SparseMatrix a = adjacency(d);
  const int nclasses = (d + 1) * (d + 2) / 2;
  RowSpace powers(a.nrows() * a.ncols());
  SparseMatrix p = SparseMatrix::identity(a.nrows());
  for (int k = 0; k <= nclasses; ++k) {
    powers.insert(flatten(p));
    p = p * a;
  }
  return powers.contains(flatten(a.transpose()));
}

// <L1, L2, R1, R2> and <A, A^T, E*> generate the same algebra: canonical
// bases of the two closures must coincide.
inline bool check_generator_equivalence(int d, int cap = kDefaultClosureCap) {
  if (d < 1) throw DomainError("check_generator_equivalence: need d >= 1");
  check_closure_cap(d, cap);
  AlgebraBasis full = terwilliger_algebra(d, cap);
  const OperatorSet ops = build_operators(d);
  AlgebraBasis llrr = algebra_span({ops.l1, ops.l2, ops.r1, ops.r2}, full.dim);
  return llrr.dim == full.dim && same_row_space(llrr.basis, full.basis);
}

}  // namespace twalg
