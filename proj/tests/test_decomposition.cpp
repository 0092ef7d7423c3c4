#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <utility>

#include "twalg/decomposition.hpp"
#include "twalg/golden.hpp"

using namespace twalg;

TEST_CASE("highest weight vectors of the base shell", "[decomposition]") {
  for (int d = 1; d <= 4; ++d) {
    auto vecs = highest_weight_vectors(d, 0, 0);
    REQUIRE(vecs.size() == 1);
    CHECK(vecs[0] == SparseVec::unit(pow3(d), 0));
  }
}

TEST_CASE("the d=2 weight (0,1) vector", "[decomposition]") {
  auto vecs = highest_weight_vectors(2, 1, 0);
  REQUIRE(vecs.size() == 1);
  // e_10 - e_01 up to scale
  SparseVec expected = vec_combine(rat(1), SparseVec::unit(9, 3), rat(-1), SparseVec::unit(9, 1));
  CHECK(in_span(expected, vecs));
  CHECK(in_span(vecs[0], {expected}));
}

TEST_CASE("restricted lowering stacks: rank and nullity by hand", "[decomposition]") {
  // built directly from public pieces, independent of highest_weight_vectors
  OperatorSet o = build_operators(2);
  {
    // shell with one 1 and one 2: L1 and L2 both act, stacked rank 2, no kernel
    auto shell = shell_vertices(2, 1, 1);
    SparseMatrix stack = vstack(submatrix(o.l1, shell_vertices(2, 0, 1), shell),
                                submatrix(o.l2, shell_vertices(2, 2, 0), shell));
    CHECK(rank(stack) == 2);
    CHECK(nullspace_basis(stack).empty());
    CHECK(highest_weight_vectors(2, 1, 1).empty());
  }
  {
    // shell with one 1, no 2: nullity 1, the lone weight (0,1) vector
    auto shell = shell_vertices(2, 1, 0);
    SparseMatrix stack = vstack(submatrix(o.l1, shell_vertices(2, 0, 0), shell),
                                submatrix(o.l2, shell_vertices(2, 2, -1), shell));
    CHECK(rank(stack) == 1);
    CHECK(nullspace_basis(stack).size() == 1);
  }
}

TEST_CASE("multiplicities equal the unrestricted stacked nullity", "[decomposition]") {
  for (int d = 1; d <= 3; ++d) {
    OperatorSet o = build_operators(d);
    auto ker = nullspace_basis(vstack(o.l1, o.l2));  // 2*3^d x 3^d, no shell restriction
    // kernel vectors of the full stack may mix shells; the multiplicity of a
    // shell is the rank of their projections onto it
    std::map<std::pair<int, int>, long long> by_shell;
    for (auto [s, t] : shells(d)) {
      auto shell = shell_vertices(d, s, t);
      std::map<index_t, index_t> pos;
      for (std::size_t p = 0; p < shell.size(); ++p) pos[shell[p]] = static_cast<index_t>(p);
      RowSpace rs(static_cast<index_t>(shell.size()));
      for (const auto& v : ker) {
        SparseVec local(static_cast<index_t>(shell.size()));
        for (const auto& [idx, val] : v.ent) {
          auto it = pos.find(idx);
          if (it != pos.end()) local.ent.emplace_back(it->second, val);
        }
        rs.insert(local);
      }
      by_shell[{s, t}] = rs.rank();
    }
    for (auto [s, t] : shells(d)) {
      INFO("d=" << d << " shell (" << s << "," << t << ")");
      CHECK(static_cast<long long>(highest_weight_vectors(o, s, t).size()) == by_shell[{s, t}]);
    }
  }
}

TEST_CASE("weights read off the census", "[decomposition]") {
  OperatorSet o5 = build_operators(5);
  CHECK(weight_of(SparseVec::unit(pow3(5), 0), o5) == Weight{5, 0});
  OperatorSet o3 = build_operators(3);
  CHECK(weight_of(SparseVec::unit(27, index_of(vertex_from_string("010"))), o3) == Weight{1, 1});
  CHECK(weight_of(SparseVec::unit(27, index_of(vertex_from_string("012"))), o3) == Weight{0, 0});
  SparseVec mixed = vec_combine(rat(1), SparseVec::unit(27, 0), rat(1), SparseVec::unit(27, 1));
  CHECK_THROWS_AS(weight_of(mixed, o3), PreconditionError);
  CHECK_THROWS_AS(weight_of(SparseVec(27), o3), PreconditionError);
}

TEST_CASE("dimension formula", "[decomposition]") {
  CHECK(dim_formula({0, 0}) == 1);
  CHECK(dim_formula({1, 1}) == 8);
  CHECK(dim_formula({3, 1}) == 24);
  CHECK(dim_formula({1, 2}) == 15);
  CHECK_THROWS_AS(dim_formula({-1, 0}), DomainError);
}

TEST_CASE("irreducible bases have the exact dimension", "[decomposition]") {
  {
    OperatorSet o = build_operators(1);
    auto basis = irreducible_basis(SparseVec::unit(3, 0), o);
    CHECK(basis.size() == 3);
    RowSpace rs(3);
    for (const auto& b : basis) rs.insert(b);
    CHECK(rs.rank() == 3);  // spans all of V
  }
  {
    OperatorSet o = build_operators(3);
    auto hw = highest_weight_vectors(o, 1, 0);
    REQUIRE(hw.size() == 2);
    CHECK(irreducible_basis(hw[0], o).size() == 8);
    auto v0 = highest_weight_vectors(o, 1, 1);
    REQUIRE(v0.size() == 1);
    CHECK(irreducible_basis(v0[0], o).size() == 1);
    CHECK_THROWS_AS(irreducible_basis(SparseVec::unit(27, 13), o), PreconditionError);
  }
}

TEST_CASE("decomposition matches the reference table", "[decomposition]") {
  for (int d = 1; d <= 5; ++d) {
    DecompositionReport rep = decompose(d);
    auto want = reference_decomposition(d);
    REQUIRE(rep.blocks.size() == want.size());
    for (std::size_t i = 0; i < want.size(); ++i) {
      INFO("d=" << d << " block " << i);
      CHECK(rep.blocks[i].hwv_type == want[i].hwv_type);
      CHECK(rep.blocks[i].weight == want[i].weight);
      CHECK(rep.blocks[i].dim == want[i].dim);
      CHECK(rep.blocks[i].mult == want[i].mult);
    }
    CHECK(rep.total == pow3(d));
  }
}

TEST_CASE("decompose is thread-count independent", "[decomposition]") {
  DecompositionReport a = decompose(4, 1), b = decompose(4, 2);
  REQUIRE(a.blocks.size() == b.blocks.size());
  for (std::size_t i = 0; i < a.blocks.size(); ++i) CHECK(a.blocks[i] == b.blocks[i]);
}

TEST_CASE("shells violating r >= s >= t carry no highest weight vectors", "[decomposition]") {
  for (int d = 1; d <= 4; ++d)
    for (auto [s, t] : shells(d)) {
      int r = d - s - t;
      if (r >= s && s >= t) continue;
      INFO("d=" << d << " shell (" << s << "," << t << ")");
      CHECK(highest_weight_vectors(d, s, t).empty());
    }
  CHECK_THROWS_AS(highest_weight_vectors(2, 2, 1), DomainError);
}

TEST_CASE("raising strings truncate exactly at the weight", "[decomposition]") {
  OperatorSet o = build_operators(3);
  for (auto [s, t] : {std::pair{0, 0}, std::pair{1, 0}}) {
    for (const SparseVec& v : highest_weight_vectors(o, s, t)) {
      Weight w = weight_of(v, o);
      SparseVec u = v;
      for (long i = 1; i <= w.m1; ++i) {
        u = o.r1 * u;
        INFO("i=" << i);
        CHECK_FALSE(u.is_zero());
      }
      CHECK((o.r1 * u).is_zero());
    }
  }
}

TEST_CASE("weight bookkeeping under raising", "[decomposition]") {
  OperatorSet o = build_operators(4);
  auto hw = highest_weight_vectors(o, 1, 0);  // weight (2,1)
  REQUIRE(!hw.empty());
  const Weight w = weight_of(hw[0], o);
  for (long u = 0; u <= 2; ++u)
    for (long v = 0; v <= 1; ++v)
      for (long k = 0; k <= 1; ++k) {
        SparseVec x = hw[0];
        for (long q = 0; q < u; ++q) x = o.r1 * x;
        for (long q = 0; q < v; ++q) x = o.r2 * x;
        for (long q = 0; q < k; ++q) x = o.r3 * x;
        if (x.is_zero()) continue;
        CHECK(weight_of(x, o) == Weight{w.m1 - 2 * u + v - k, w.m2 + u - 2 * v - k});
      }
}

// The two order-swapped raised families each span the whole module once the
// R3 powers are included.  (Their k = 0 slices alone do not have equal spans:
// R2 R1 v - R1 R2 v = R3 v, which is independent in the weight-zero space of
// the adjoint block.)
TEST_CASE("the two raised families span the same module", "[decomposition]") {
  for (int d = 2; d <= 3; ++d) {
    OperatorSet o = build_operators(d);
    for (auto [s, t] : shells(d)) {
      for (const SparseVec& v : highest_weight_vectors(o, s, t)) {
        Weight w = weight_of(v, o);
        RowSpace fam1(v.dim), fam2(v.dim);
        SparseVec ui = v;
        for (long i = 0; i <= w.m1; ++i) {
          if (i > 0) ui = o.r1 * ui;
          SparseVec uij = ui;
          for (long j = 0; j <= w.m2; ++j) {
            if (j > 0) uij = o.r2 * uij;
            SparseVec uijk = uij;
            for (long k = 0; k <= w.m1 + w.m2 - i - j; ++k) {
              if (k > 0) uijk = o.r3 * uijk;
              fam1.insert(uijk);  // R3^k R2^j R1^i v
            }
          }
        }
        SparseVec vj = v;
        for (long j = 0; j <= w.m2; ++j) {
          if (j > 0) vj = o.r2 * vj;
          SparseVec vji = vj;
          for (long i = 0; i <= w.m1; ++i) {
            if (i > 0) vji = o.r1 * vji;
            SparseVec vjik = vji;
            for (long k = 0; k <= w.m1 + w.m2 - i - j; ++k) {
              if (k > 0) vjik = o.r3 * vjik;
              fam2.insert(vjik);  // R3^k R1^i R2^j v
            }
          }
        }
        CHECK(fam1.rank() == dim_formula(w));
        CHECK(fam2.rank() == dim_formula(w));
        CHECK(same_row_space(fam1, fam2));
      }
    }
  }
}

TEST_CASE("recursive highest weight construction", "[decomposition]") {
  for (int d = 1; d <= 4; ++d)
    CHECK(build_hwv_recursive(d, 0, 0) == SparseVec::unit(pow3(d), 0));

  SparseVec alt = build_hwv_recursive(3, 1, 1);
  CHECK(alt.nnz() == 6);
  CHECK(alt.at(index_of(vertex_from_string("012"))) == 1);
  CHECK(alt.at(index_of(vertex_from_string("120"))) == 1);
  CHECK(alt.at(index_of(vertex_from_string("201"))) == 1);
  CHECK(alt.at(index_of(vertex_from_string("021"))) == -1);
  CHECK(alt.at(index_of(vertex_from_string("102"))) == -1);
  CHECK(alt.at(index_of(vertex_from_string("210"))) == -1);

  CHECK(in_span(build_hwv_recursive(4, 1, 1), highest_weight_vectors(4, 1, 1)));
  CHECK(in_span(build_hwv_recursive(5, 2, 1), highest_weight_vectors(5, 2, 1)));
  CHECK_THROWS_AS(build_hwv_recursive(3, 2, 0), DomainError);  // r < s
  CHECK_THROWS_AS(build_hwv_recursive(4, 1, 2), DomainError);  // s < t
}

TEST_CASE("complete reducibility at small d", "[decomposition]") {
  for (int d = 2; d <= 4; ++d) {
    auto rc = complete_reducibility(d);
    CHECK(rc.vector_count == pow3(d));
    CHECK(rc.rank == pow3(d));
    CHECK(rc.complete);
  }
  auto rc1 = complete_reducibility(4, 2);
  CHECK(rc1.rank == 81);
}

TEST_CASE("index box adjudication prefers the R1<=m1 box", "[decomposition]") {
  OperatorSet o = build_operators(3);
  auto principal = highest_weight_vectors(o, 0, 0);  // weight (3,0): asymmetric
  auto adj = adjudicate_index_box(principal[0], o);
  CHECK(adj.r1_bound_m1_ok);
  CHECK_FALSE(adj.r1_bound_m2_ok);
}
