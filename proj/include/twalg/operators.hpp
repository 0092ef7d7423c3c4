// The nine graded operators of H*(d,3) and the relation suite that pins down
// their sl3 structure.
//
// With A acting along arcs and A^T against them, the dual idempotents grade
// both into six components:
//
//   R1 = sum E*_[s+1,t]   A   E*_[s,t]   (turns a 0 into a 1)
//   R2 = sum E*_[s-1,t+1] A   E*_[s,t]   (turns a 1 into a 2)
//   L3 = sum E*_[s,t-1]   A   E*_[s,t]   (turns a 2 into a 0)
//   L1 = sum E*_[s-1,t]   A^T E*_[s,t]   (turns a 1 into a 0)
//   L2 = sum E*_[s+1,t-1] A^T E*_[s,t]   (turns a 2 into a 1)
//   R3 = sum E*_[s,t+1]   A^T E*_[s,t]   (turns a 0 into a 2)
//
// and H1 = sum (r-s) E*, H2 = sum (s-t) E*, H3 = sum (r-t) E*.  Out-of-range
// idempotents in the sums are zero matrices, so each entry of A (resp. A^T)
// survives in exactly one component.
#pragma once

#include <string>
#include <vector>

#include "twalg/hamming.hpp"
#include "twalg/rowspace.hpp"
#include "twalg/sparse.hpp"

namespace twalg {

struct OperatorSet {
  int d = 0;
  SparseMatrix a, at;
  SparseMatrix h1, h2, h3;
  SparseMatrix r1, r2, r3;
  SparseMatrix l1, l2, l3;
};

namespace detail {

// Evaluates sum_{s,t} E*_[s+ds, t+dt] M E*_[s,t] in one pass: the shells
// partition the vertex set, so the sum keeps exactly the entries (x, y) with
// census(x) = census(y) + (ds, dt).
inline SparseMatrix graded_component(const SparseMatrix& m, int ds, int dt,
                                     const std::vector<TypeTriple>& cen) {
  std::vector<std::tuple<index_t, index_t, Rat>> ts;
  for (index_t x = 0; x < m.nrows(); ++x) {
    const TypeTriple& cx = cen[static_cast<std::size_t>(x)];
    for (const auto& [y, v] : m.row(x)) {
      const TypeTriple& cy = cen[static_cast<std::size_t>(y)];
      if (cx.s == cy.s + ds && cx.t == cy.t + dt) ts.emplace_back(x, y, v);
    }
  }
  return SparseMatrix::from_triplets(m.nrows(), m.ncols(), ts);
}

inline SparseMatrix census_diagonal(int d, const std::vector<TypeTriple>& cen, int which) {
  const index_t n = pow3(d);
  std::vector<std::tuple<index_t, index_t, Rat>> ts;
  for (index_t x = 0; x < n; ++x) {
    const TypeTriple& c = cen[static_cast<std::size_t>(x)];
    long v = which == 1 ? c.r - c.s : which == 2 ? c.s - c.t : c.r - c.t;
    if (v != 0) ts.emplace_back(x, x, rat(v));
  }
  return SparseMatrix::from_triplets(n, n, ts);
}

}  // namespace detail

inline OperatorSet build_operators(int d) {
  if (d < 1) throw DomainError("build_operators: need d >= 1");
  check_size_cap(d);
  OperatorSet ops;
  ops.d = d;
  ops.a = adjacency(d);
  ops.at = ops.a.transpose();
  const index_t n = pow3(d);
  std::vector<TypeTriple> cen;
  cen.reserve(static_cast<std::size_t>(n));
  for (index_t x = 0; x < n; ++x) cen.push_back(census(x, d));
  ops.h1 = detail::census_diagonal(d, cen, 1);
  ops.h2 = detail::census_diagonal(d, cen, 2);
  ops.h3 = detail::census_diagonal(d, cen, 3);
  ops.r1 = detail::graded_component(ops.a, +1, 0, cen);
  ops.r2 = detail::graded_component(ops.a, -1, +1, cen);
  ops.l3 = detail::graded_component(ops.a, 0, -1, cen);
  ops.l1 = detail::graded_component(ops.at, -1, 0, cen);
  ops.l2 = detail::graded_component(ops.at, +1, -1, cen);
  ops.r3 = detail::graded_component(ops.at, 0, +1, cen);
  return ops;
}

// ---------------------------------------------------------------------------
// Relation reports

struct RelationReport {
  std::string name;
  SparseMatrix lhs, rhs;
  bool pass = false;
  Rat max_abs_discrepancy;  // zero on pass
  std::string detail;
};

inline RelationReport make_relation(std::string name, SparseMatrix lhs, SparseMatrix rhs,
                                    std::string detail = "") {
  RelationReport rep;
  rep.name = std::move(name);
  SparseMatrix diff = lhs - rhs;
  rep.pass = diff.is_zero();
  rep.max_abs_discrepancy = diff.max_abs();
  rep.lhs = std::move(lhs);
  rep.rhs = std::move(rhs);
  rep.detail = std::move(detail);
  return rep;
}

// The three sl2 triples: [Li, Ri] = Hi, [Hi, Li] = 2Li, [Hi, Ri] = -2Ri.
inline std::vector<RelationReport> check_sl2_triples(const OperatorSet& o) {
  std::vector<RelationReport> out;
  const SparseMatrix* L[3] = {&o.l1, &o.l2, &o.l3};
  const SparseMatrix* R[3] = {&o.r1, &o.r2, &o.r3};
  const SparseMatrix* H[3] = {&o.h1, &o.h2, &o.h3};
  for (int i = 0; i < 3; ++i) {
    std::string k = std::to_string(i + 1);
    out.push_back(make_relation("[L" + k + ",R" + k + "] == H" + k, commutator(*L[i], *R[i]), *H[i]));
    out.push_back(
        make_relation("[H" + k + ",L" + k + "] == 2*L" + k, commutator(*H[i], *L[i]), rat(2) * *L[i]));
    out.push_back(
        make_relation("[H" + k + ",R" + k + "] == -2*R" + k, commutator(*H[i], *R[i]), rat(-2) * *R[i]));
  }
  return out;
}

// Everything that couples distinct indices, including the Serre relations.
inline std::vector<RelationReport> check_cross_relations(const OperatorSet& o) {
  const index_t n = o.a.nrows();
  const SparseMatrix Z(n, n);
  std::vector<RelationReport> out;
  out.push_back(make_relation("H3 == H1 + H2", o.h3, o.h1 + o.h2));
  out.push_back(make_relation("[H1,H2] == 0", commutator(o.h1, o.h2), Z));
  out.push_back(make_relation("[H1,H3] == 0", commutator(o.h1, o.h3), Z));
  out.push_back(make_relation("[H2,H3] == 0", commutator(o.h2, o.h3), Z));
  out.push_back(make_relation("[L1,L2] == L3", commutator(o.l1, o.l2), o.l3));
  out.push_back(make_relation("[R1,R2] == -R3", commutator(o.r1, o.r2), rat(-1) * o.r3));
  out.push_back(make_relation("[L1,R2] == 0", commutator(o.l1, o.r2), Z));
  out.push_back(make_relation("[L2,R1] == 0", commutator(o.l2, o.r1), Z));
  out.push_back(make_relation("[H1,L2] == -L2", commutator(o.h1, o.l2), rat(-1) * o.l2));
  out.push_back(make_relation("[H2,L1] == -L1", commutator(o.h2, o.l1), rat(-1) * o.l1));
  out.push_back(
      make_relation("[L1,[L1,L2]] == 0", commutator(o.l1, commutator(o.l1, o.l2)), Z));
  out.push_back(
      make_relation("[L2,[L2,L1]] == 0", commutator(o.l2, commutator(o.l2, o.l1)), Z));
  return out;
}

namespace detail {

// Entries of m that violate "undirected weight s+t shifts by `shift`".
inline SparseMatrix weight_shift_violations(const SparseMatrix& m, int shift, int d) {
  std::vector<std::tuple<index_t, index_t, Rat>> ts;
  for (index_t x = 0; x < m.nrows(); ++x) {
    TypeTriple cx = census(x, d);
    for (const auto& [y, v] : m.row(x)) {
      TypeTriple cy = census(y, d);
      if (cx.s + cx.t != cy.s + cy.t + shift) ts.emplace_back(x, y, v);
    }
  }
  return SparseMatrix::from_triplets(m.nrows(), m.ncols(), ts);
}

// Adjacency of the undirected Hamming graph H(d,3), built from scratch.
inline SparseMatrix undirected_adjacency(int d) {
  const index_t n = pow3(d);
  std::vector<std::tuple<index_t, index_t, Rat>> ts;
  index_t place = n / 3;
  for (int p = 0; p < d; ++p, place /= 3) {
    for (index_t x = 0; x < n; ++x) {
      index_t digit = (x / place) % 3;
      for (index_t nd = 0; nd < 3; ++nd)
        if (nd != digit) ts.emplace_back(x - digit * place + nd * place, x, rat(1));
    }
  }
  return SparseMatrix::from_triplets(n, n, ts);
}

}  // namespace detail

// A + A^T is the undirected Hamming adjacency, and R1+R3 / R2+L2 / L1+L3
// raise / preserve / lower the undirected weight s + t.
inline std::vector<RelationReport> check_undirected_operators(const OperatorSet& o) {
  const index_t n = o.a.nrows();
  const SparseMatrix Z(n, n);
  std::vector<RelationReport> out;
  out.push_back(make_relation("A + At == undirected Hamming adjacency", o.a + o.at,
                              detail::undirected_adjacency(o.d),
                              "symmetric 0/1 matrix with row sums 2d"));
  out.push_back(make_relation("R1 + R3 raises undirected weight",
                              detail::weight_shift_violations(o.r1 + o.r3, +1, o.d), Z,
                              "support condition under E*-sandwiching"));
  out.push_back(make_relation("R2 + L2 preserves undirected weight",
                              detail::weight_shift_violations(o.r2 + o.l2, 0, o.d), Z,
                              "support condition under E*-sandwiching"));
  out.push_back(make_relation("L1 + L3 lowers undirected weight",
                              detail::weight_shift_violations(o.l1 + o.l3, -1, o.d), Z,
                              "support condition under E*-sandwiching"));
  return out;
}

// The two power-commutator expansions
//   [R2^j, R1^i] = sum_k k! C(i,k) C(j,k) R3^k R1^(i-k) R2^(j-k)
//   [R1^i, R2^j] = sum_k (-1)^k k! C(i,k) C(j,k) R3^k R2^(j-k) R1^(i-k)
// verified as exact matrix identities.
inline RelationReport check_higher_commutators(const OperatorSet& o, int i, int j) {
  if (i < 1 || j < 1 || i + j > 2 * o.d)
    throw PreconditionError("check_higher_commutators: need i,j >= 1 and i+j <= 2d");
  std::vector<SparseMatrix> p1{SparseMatrix::identity(o.a.nrows())};
  std::vector<SparseMatrix> p2{SparseMatrix::identity(o.a.nrows())};
  std::vector<SparseMatrix> p3{SparseMatrix::identity(o.a.nrows())};
  for (int k = 1; k <= i; ++k) p1.push_back(p1.back() * o.r1);
  for (int k = 1; k <= j; ++k) p2.push_back(p2.back() * o.r2);
  for (int k = 1; k <= std::min(i, j); ++k) p3.push_back(p3.back() * o.r3);

  SparseMatrix lhs = p2[j] * p1[i] - p1[i] * p2[j];
  SparseMatrix rhs(o.a.nrows(), o.a.ncols());
  SparseMatrix rhs_swapped(o.a.nrows(), o.a.ncols());
  for (int k = 1; k <= std::min(i, j); ++k) {
    Rat c = rat(factorial(static_cast<unsigned long>(k)) *
                binomial(static_cast<unsigned long>(i), static_cast<unsigned long>(k)) *
                binomial(static_cast<unsigned long>(j), static_cast<unsigned long>(k)));
    rhs = rhs + c * (p3[k] * p1[i - k] * p2[j - k]);
    Rat cs = (k % 2 == 0) ? c : Rat(-c);
    rhs_swapped = rhs_swapped + cs * (p3[k] * p2[j - k] * p1[i - k]);
  }
  RelationReport rep = make_relation(
      "power commutators (i=" + std::to_string(i) + ", j=" + std::to_string(j) + ")", lhs, rhs);
  SparseMatrix diff2 = (rat(-1) * lhs) - rhs_swapped;
  bool pass2 = diff2.is_zero();
  rep.pass = rep.pass && pass2;
  if (!pass2 && rep.max_abs_discrepancy < diff2.max_abs())
    rep.max_abs_discrepancy = diff2.max_abs();
  rep.detail = std::string("R2^j R1^i ordering ") + (pass2 ? "and" : "but NOT") +
               " R1^i R2^j ordering";
  return rep;
}

namespace detail {

// If lhs == c * base for a scalar c, returns true and sets c.
inline bool proportional_to(const SparseVec& lhs, const SparseVec& base, Rat& c) {
  if (base.is_zero()) {
    c = 0;
    return lhs.is_zero();
  }
  if (lhs.is_zero()) {
    c = 0;
    return true;
  }
  c = lhs.at(base.ent.front().first) / base.ent.front().second;
  return lhs == c * base;
}

}  // namespace detail

// Action of L3 on R1^i R2^j v (and on R2^j R1^i v) for a highest weight
// vector v.  The proportionality and the exact scalar are established by
// computation; the report records which printed sign the scalar matched.
inline RelationReport check_l3_action(const OperatorSet& o, const SparseVec& v, long m1, long m2,
                                      int i, int j) {
  if (v.is_zero() || !(o.l1 * v).is_zero() || !(o.l2 * v).is_zero() || o.h1 * v != rat(m1) * v ||
      o.h2 * v != rat(m2) * v)
    throw PreconditionError("check_l3_action: v is not a highest weight vector of weight (m1,m2)");
  auto apply_pow = [](const SparseMatrix& m, int k, SparseVec w) {
    for (int q = 0; q < k; ++q) w = m * w;
    return w;
  };

  RelationReport rep;
  rep.name = "L3 action on raised vectors (i=" + std::to_string(i) + ", j=" + std::to_string(j) + ")";
  rep.lhs = SparseMatrix(0, 0);
  rep.rhs = SparseMatrix(0, 0);

  // Ordering L3 R1^i R2^j v, compared against R1^(i-1) R2^(j-1) v.
  SparseVec lhs1 = o.l3 * apply_pow(o.r1, i, apply_pow(o.r2, j, v));
  Rat c1;
  bool ok1;
  if (i == 0 || j == 0) {
    ok1 = lhs1.is_zero();
    c1 = 0;
  } else {
    SparseVec base1 = apply_pow(o.r1, i - 1, apply_pow(o.r2, j - 1, v));
    ok1 = detail::proportional_to(lhs1, base1, c1);
  }

  // Ordering L3 R2^j R1^i v, compared against R2^(j-1) R1^(i-1) v.
  SparseVec lhs2 = o.l3 * apply_pow(o.r2, j, apply_pow(o.r1, i, v));
  Rat c2;
  bool ok2;
  if (i == 0 || j == 0) {
    ok2 = lhs2.is_zero();
    c2 = 0;
  } else {
    SparseVec base2 = apply_pow(o.r2, j - 1, apply_pow(o.r1, i - 1, v));
    ok2 = detail::proportional_to(lhs2, base2, c2);
  }

  Rat mag1 = rat(static_cast<long>(i) * j) * rat_abs(rat(m2 - j + 1));
  Rat mag2 = rat(static_cast<long>(i) * j) * rat_abs(rat(m1 - i + 1));
  bool mag_ok = (i == 0 || j == 0) || (rat_abs(c1) == mag1 && rat_abs(c2) == mag2);
  rep.pass = ok1 && ok2 && mag_ok;
  rep.max_abs_discrepancy = rep.pass ? rat(0) : rat(1);
  std::string s1 = (c1 == Rat(rat(-static_cast<long>(i) * j) * rat(m2 - j + 1))) ? "-ij(m2-j+1)"
                   : (c1 == Rat(rat(static_cast<long>(i) * j) * rat(m2 - j + 1))) ? "+ij(m2-j+1)"
                                                                                  : "neither";
  std::string s2 = (c2 == Rat(rat(static_cast<long>(i) * j) * rat(m1 - i + 1))) ? "+ij(m1-i+1)"
                   : (c2 == Rat(rat(-static_cast<long>(i) * j) * rat(m1 - i + 1))) ? "-ij(m1-i+1)"
                                                                                   : "neither";
  rep.detail = "L3 R1^i R2^j v = (" + rat_to_string(c1) + ") * R1^(i-1) R2^(j-1) v, form " + s1 +
               "; L3 R2^j R1^i v = (" + rat_to_string(c2) + ") * R2^(j-1) R1^(i-1) v, form " + s2;
  return rep;
}

// The canonical 27-identity relation suite.
inline std::vector<RelationReport> relation_suite(const OperatorSet& o) {
  std::vector<RelationReport> out;
  out.push_back(make_relation("A == R1 + R2 + L3", o.a, o.r1 + o.r2 + o.l3));
  out.push_back(make_relation("At == L1 + L2 + R3", o.at, o.l1 + o.l2 + o.r3));
  for (auto& r : check_undirected_operators(o)) out.push_back(std::move(r));
  for (auto& r : check_sl2_triples(o)) out.push_back(std::move(r));
  for (auto& r : check_cross_relations(o)) out.push_back(std::move(r));
  return out;
}

}  // namespace twalg
