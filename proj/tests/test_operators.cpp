#include <catch2/catch_amalgamated.hpp>

#include "twalg/operators.hpp"

#include "oracles.hpp"

using namespace twalg;

TEST_CASE("d=1 operators in closed form", "[operators]") {
  OperatorSet o = build_operators(1);
  auto unit = [](index_t i, index_t j) {
    SparseMatrix m(3, 3);
    m.add_at(i, j, rat(1));
    return m;
  };
  CHECK(o.r1 == unit(1, 0));
  CHECK(o.r2 == unit(2, 1));
  CHECK(o.r3 == unit(2, 0));
  CHECK(o.l1 == unit(0, 1));
  CHECK(o.l2 == unit(1, 2));
  CHECK(o.l3 == unit(0, 2));
  CHECK(o.h1.at(0, 0) == 1);
  CHECK(o.h1.at(1, 1) == -1);
  CHECK(o.h1.at(2, 2) == 0);
}

TEST_CASE("operators match the literal idempotent sandwich sums", "[operators]") {
  for (int d = 1; d <= 3; ++d) {
    OperatorSet o = build_operators(d);
    const index_t n = pow3(d);
    auto proj = [&](int s, int t) { return dual_idempotent(d, s, t).matrix; };
    SparseMatrix r1(n, n), r2(n, n), r3(n, n), l1(n, n), l2(n, n), l3(n, n);
    for (auto [s, t] : shells(d)) {
      const SparseMatrix e = proj(s, t);
      r1 = r1 + proj(s + 1, t) * o.a * e;
      r2 = r2 + proj(s - 1, t + 1) * o.a * e;
      l3 = l3 + proj(s, t - 1) * o.a * e;
      l1 = l1 + proj(s - 1, t) * o.at * e;
      l2 = l2 + proj(s + 1, t - 1) * o.at * e;
      r3 = r3 + proj(s, t + 1) * o.at * e;
    }
    CHECK(o.r1 == r1);
    CHECK(o.r2 == r2);
    CHECK(o.r3 == r3);
    CHECK(o.l1 == l1);
    CHECK(o.l2 == l2);
    CHECK(o.l3 == l3);
  }
}

TEST_CASE("diagonal operators scale by the census differences", "[operators]") {
  OperatorSet o = build_operators(3);
  for (index_t y : {0, 5, 13, 26}) {
    TypeTriple c = census(y, 3);
    SparseVec e = SparseVec::unit(27, y);
    CHECK(o.h1 * e == rat(c.r - c.s) * e);
    CHECK(o.h2 * e == rat(c.s - c.t) * e);
    CHECK(o.h3 * e == rat(c.r - c.t) * e);
  }
}

TEST_CASE("arc decomposition recovers the adjacency", "[operators]") {
  for (int d = 1; d <= 4; ++d) {
    OperatorSet o = build_operators(d);
    CHECK(o.a == o.r1 + o.r2 + o.l3);
    CHECK(o.at == o.l1 + o.l2 + o.r3);
  }
}

TEST_CASE("structure: diagonals and transposes", "[operators]") {
  for (int d = 1; d <= 3; ++d) {
    OperatorSet o = build_operators(d);
    for (const SparseMatrix* h : {&o.h1, &o.h2, &o.h3})
      for (index_t i = 0; i < h->nrows(); ++i)
        for (const auto& [j, v] : h->row(i)) CHECK(i == j);
    CHECK(o.r1 == o.l1.transpose());
    CHECK(o.r2 == o.l2.transpose());
    CHECK(o.r3 == o.l3.transpose());
  }
}

TEST_CASE("support grading of the six ladder operators", "[operators]") {
  const int d = 3;
  OperatorSet o = build_operators(d);
  auto shifts_by = [&](const SparseMatrix& m, int ds, int dt) {
    for (index_t x = 0; x < m.nrows(); ++x) {
      TypeTriple cx = census(x, d);
      for (const auto& [y, v] : m.row(x)) {
        TypeTriple cy = census(y, d);
        if (cx.s != cy.s + ds || cx.t != cy.t + dt) return false;
      }
    }
    return true;
  };
  CHECK(shifts_by(o.r1, +1, 0));
  CHECK(shifts_by(o.r2, -1, +1));
  CHECK(shifts_by(o.r3, 0, +1));
  CHECK(shifts_by(o.l1, -1, 0));
  CHECK(shifts_by(o.l2, +1, -1));
  CHECK(shifts_by(o.l3, 0, -1));
}

TEST_CASE("relation suite holds exactly for d = 1..3", "[operators]") {
  for (int d = 1; d <= 3; ++d) {
    auto suite = relation_suite(build_operators(d));
    REQUIRE(suite.size() == 27);
    for (const auto& r : suite) {
      INFO("d=" << d << " " << r.name);
      CHECK(r.pass);
      CHECK(r.max_abs_discrepancy == 0);
    }
  }
}

TEST_CASE("undirected adjacency at d=1 is the triangle", "[operators]") {
  OperatorSet o = build_operators(1);
  SparseMatrix k3(3, 3);
  for (index_t i = 0; i < 3; ++i)
    for (index_t j = 0; j < 3; ++j)
      if (i != j) k3.add_at(i, j, rat(1));
  CHECK(o.a + o.at == k3);
  OperatorSet o4 = build_operators(4);
  CHECK(o4.a + o4.at == (o4.a + o4.at).transpose());
}

TEST_CASE("power commutator identities", "[operators]") {
  OperatorSet o3 = build_operators(3);
  // i = j = 1 degenerates to the plain bracket [R2, R1] = R3
  CHECK(commutator(o3.r2, o3.r1) == o3.r3);
  CHECK(check_higher_commutators(o3, 1, 1).pass);
  CHECK(check_higher_commutators(o3, 2, 1).pass);
  CHECK(check_higher_commutators(o3, 1, 2).pass);
  CHECK(check_higher_commutators(o3, 3, 3).pass);
  CHECK_THROWS_AS(check_higher_commutators(o3, 0, 1), PreconditionError);
  CHECK_THROWS_AS(check_higher_commutators(o3, 4, 3), PreconditionError);
}

TEST_CASE("lowering action on raised vectors", "[operators]") {
  OperatorSet o = build_operators(3);
  // weight (1,1) vectors live in the shell with one 1, no 2
  SparseMatrix l1s = submatrix(o.l1, shell_vertices(3, 0, 0), shell_vertices(3, 1, 0));
  auto ker = nullspace_basis(l1s);  // L2 vanishes on t=0 shells
  REQUIRE(ker.size() == 2);
  SparseVec v(27);
  const auto shell = shell_vertices(3, 1, 0);
  for (const auto& [pos, val] : ker[0].ent) v.ent.emplace_back(shell[static_cast<std::size_t>(pos)], val);

  auto rep = check_l3_action(o, v, 1, 1, 1, 1);
  CHECK(rep.pass);
  CHECK(rep.detail.find("-ij(m2-j+1)") != std::string::npos);
  CHECK(rep.detail.find("+ij(m1-i+1)") != std::string::npos);

  CHECK(check_l3_action(o, v, 1, 1, 2, 0).pass);  // j = 0: everything vanishes
  CHECK(check_l3_action(o, v, 1, 1, 0, 2).pass);

  SparseVec not_hwv = SparseVec::unit(27, 13);
  CHECK_THROWS_AS(check_l3_action(o, not_hwv, 0, 0, 1, 1), PreconditionError);
}
