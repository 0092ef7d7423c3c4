#include <catch2/catch_amalgamated.hpp>

#include "twalg/closure.hpp"
#include "twalg/decomposition.hpp"

using namespace twalg;

TEST_CASE("trivial spans", "[closure]") {
  AlgebraBasis one = algebra_span({SparseMatrix::identity(3)});
  CHECK(one.dim == 1);
}

TEST_CASE("Terwilliger dimensions at small d", "[closure]") {
  CHECK(terwilliger_dim(1) == 9);
  CHECK(terwilliger_dim(2) == 45);
  CHECK_THROWS_AS(terwilliger_dim(kDefaultClosureCap + 1), ResourceError);
}

TEST_CASE("plain and graded closures agree", "[closure]") {
  for (int d = 1; d <= 2; ++d) {
    std::vector<SparseMatrix> gens = terwilliger_generators(d);
    std::vector<SparseMatrix> es = dual_idempotent_family(d);
    std::vector<SparseMatrix> all = gens;
    for (const auto& e : es) all.push_back(e);
    AlgebraBasis plain = algebra_span(all);
    AlgebraBasis graded = algebra_span(gens, es);
    CHECK(plain.dim == graded.dim);
    CHECK(same_row_space(plain.basis, graded.basis));
  }
}

TEST_CASE("closure is idempotent", "[closure]") {
  AlgebraBasis t1 = terwilliger_algebra(1);
  std::vector<SparseMatrix> basis_matrices;
  for (const SparseVec& row : t1.basis.basis()) basis_matrices.push_back(unflatten(row, 3, 3));
  AlgebraBasis again = algebra_span(basis_matrices);
  CHECK(again.dim == t1.dim);
  CHECK(same_row_space(again.basis, t1.basis));
}

TEST_CASE("dropping the transpose generator changes nothing", "[closure]") {
  for (int d = 1; d <= 2; ++d) {
    std::vector<SparseMatrix> no_transpose{adjacency(d)};
    AlgebraBasis reduced = algebra_span(no_transpose, dual_idempotent_family(d));
    CHECK(reduced.dim == terwilliger_dim(d));
  }
}

TEST_CASE("adjacency powers span the transpose", "[closure]") {
  CHECK(check_bose_mesner(1));
  CHECK(check_bose_mesner(2));
  // d=1 explicitly: At = A^2
  SparseMatrix a = adjacency(1);
  CHECK(a * a == a.transpose());
}

TEST_CASE("generator equivalence of the two presentations", "[closure]") {
  CHECK(check_generator_equivalence(1));
  CHECK(check_generator_equivalence(2));
}

TEST_CASE("basis elements commute with isotypic projections", "[closure]") {
  // Exact rational inverse via reduced echelon of [M | I].
  auto inverse = [](const SparseMatrix& m) {
    const index_t n = m.nrows();
    SparseMatrix aug(n, 2 * n);
    for (index_t i = 0; i < n; ++i) {
      for (const auto& [j, v] : m.row(i)) aug.add_at(i, j, v);
      aug.add_at(i, n + i, rat(1));
    }
    RowSpace rs(2 * n);
    for (index_t i = 0; i < n; ++i) rs.insert(aug.row_as_vec(i));
    REQUIRE(rs.rank() == n);
    SparseMatrix inv(n, n);
    for (const SparseVec& row : rs.basis()) {
      index_t pivot = row.ent.front().first;
      REQUIRE(pivot < n);
      Rat alpha = row.ent.front().second;
      for (const auto& [j, v] : row.ent)
        if (j >= n) inv.add_at(pivot, j - n, v / alpha);
    }
    return inv;
  };

  for (int d = 1; d <= 2; ++d) {
    OperatorSet ops = build_operators(d);
    AlgebraBasis alg = terwilliger_algebra(d);
    for (auto [s, t] : shells(d)) {
      auto hws = highest_weight_vectors(ops, s, t);
      if (hws.empty()) continue;
      // isotypic component: all module copies of this block stacked as columns
      std::vector<SparseVec> cols;
      for (const auto& v : hws)
        for (const auto& b : irreducible_basis(v, ops)) cols.push_back(b);
      SparseMatrix B(pow3(d), static_cast<index_t>(cols.size()));
      for (std::size_t c = 0; c < cols.size(); ++c)
        for (const auto& [i, val] : cols[c].ent) B.add_at(i, static_cast<index_t>(c), val);
      SparseMatrix Bt = B.transpose();
      SparseMatrix proj = B * inverse(Bt * B) * Bt;
      CHECK(proj * proj == proj);
      for (const SparseVec& row : alg.basis.basis()) {
        SparseMatrix elem = unflatten(row, pow3(d), pow3(d));
        CHECK(elem * proj == proj * elem);
      }
    }
  }
}
