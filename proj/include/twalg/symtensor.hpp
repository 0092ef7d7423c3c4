// Symmetrized tensor machinery: block symmetrizations L_{r1,...,rl}, the lift
// L(M) of a 3x3 matrix into the d-fold tensor algebra, the rank-one highest
// weight tensors f (9x9) and g (27x27), and the Wedderburn block profile.
//
// symmetrize() sums one Kronecker product per distinct arrangement of the
// multiset of factor blocks (identity slots padding to width d), with
// coefficient exactly 1.  Factors may be 3x3 or any 3^w x 3^w block; a block
// of width w occupies w adjacent slots in each arrangement.
#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "twalg/decomposition.hpp"
#include "twalg/hamming.hpp"
#include "twalg/rowspace.hpp"
#include "twalg/sparse.hpp"

namespace twalg {

// e_{i,j}, 1-based: single 1 at (i-1, j-1).
inline SparseMatrix matrix_unit(int i, int j) {
  if (i < 1 || i > 3 || j < 1 || j > 3) throw DomainError("matrix_unit: indices must be in 1..3");
  SparseMatrix m(3, 3);
  m.add_at(i - 1, j - 1, rat(1));
  return m;
}

namespace detail {

inline int block_width(const SparseMatrix& m) {
  if (m.nrows() != m.ncols()) throw ShapeError("symmetrize: factors must be square");
  int w = 0;
  index_t n = m.nrows();
  while (n > 1 && n % 3 == 0) {
    n /= 3;
    ++w;
  }
  if (n != 1 || w < 1) throw ShapeError("symmetrize: factor size must be a positive power of 3");
  return w;
}

}  // namespace detail

// Sum over all distinct arrangements of the factor multiset into d tensor
// slots, each arrangement a Kronecker product, identity filling the rest.
inline SparseMatrix symmetrize(const std::vector<std::pair<SparseMatrix, int>>& factors, int d) {
  if (d < 0) throw DomainError("symmetrize: negative d");
  check_size_cap(d);
  int used = 0;
  std::vector<int> widths;
  for (const auto& [m, count] : factors) {
    if (count < 0) throw DomainError("symmetrize: negative factor count");
    widths.push_back(detail::block_width(m));
    used += widths.back() * count;
  }
  if (used > d) throw DomainError("symmetrize: factors overfill the d tensor slots");

  // symbol 0 = identity slot, symbol i >= 1 = factor i-1
  std::vector<int> symbols(static_cast<std::size_t>(d - used), 0);
  for (std::size_t f = 0; f < factors.size(); ++f)
    for (int c = 0; c < factors[f].second; ++c) symbols.push_back(static_cast<int>(f) + 1);
  std::sort(symbols.begin(), symbols.end());

  const SparseMatrix id3 = SparseMatrix::identity(3);
  const index_t n = pow3(d);
  SparseMatrix sum(n, n);
  do {
    SparseMatrix term = SparseMatrix::identity(1);
    for (int sym : symbols) term = kron(term, sym == 0 ? id3 : factors[static_cast<std::size_t>(sym - 1)].first);
    sum = sum + term;
  } while (std::next_permutation(symbols.begin(), symbols.end()));
  return sum;
}

// L(M) = sum over positions of I x ... x M x ... x I for a 3x3 block M.
inline SparseMatrix lift(const SparseMatrix& m, int d) {
  if (m.nrows() != 3 || m.ncols() != 3) throw ShapeError("lift: expected a 3x3 block");
  return symmetrize({{m, 1}}, d);
}

// N1(s,t,u) = s e12 + u e13 + t e23 (strictly upper triangular).
inline SparseMatrix nilpotent_upper(const Rat& s, const Rat& t, const Rat& u) {
  SparseMatrix m(3, 3);
  m.add_at(0, 1, s);
  m.add_at(0, 2, u);
  m.add_at(1, 2, t);
  return m;
}

// D1(s,t) = s e11 + (t-s) e22 - t e33 (traceless diagonal).
inline SparseMatrix cartan_diag(const Rat& s, const Rat& t) {
  SparseMatrix m(3, 3);
  m.add_at(0, 0, s);
  m.add_at(1, 1, t - s);
  m.add_at(2, 2, -t);
  return m;
}

// f = Sym^2(e12 x e23 - e13 x e22), a rank-one 9x9 highest weight tensor.
inline SparseMatrix build_f() {
  return symmetrize({{matrix_unit(1, 2), 1}, {matrix_unit(2, 3), 1}}, 2) -
         symmetrize({{matrix_unit(1, 3), 1}, {matrix_unit(2, 2), 1}}, 2);
}

// g = sum over permutations p of sgn(p) Sym^3(e_{1,p(1)} x e_{2,p(2)} x e_{3,p(3)}),
// the alternating 27x27 tensor.
inline SparseMatrix build_g() {
  static const int perm[6][3] = {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}, {1, 3, 2}, {2, 1, 3}, {3, 2, 1}};
  SparseMatrix g(27, 27);
  for (int p = 0; p < 6; ++p) {
    SparseMatrix term = symmetrize(
        {{matrix_unit(1, perm[p][0]), 1}, {matrix_unit(2, perm[p][1]), 1}, {matrix_unit(3, perm[p][2]), 1}},
        3);
    g = p < 3 ? g + term : g - term;
  }
  return g;
}

// Variant with the sixth summand written factor-for-factor as
// e13 x e32 x e21; the factor multiset is the same, so this should coincide
// with build_g().  Kept for the published-form adjudication.
inline SparseMatrix build_g_printed() {
  SparseMatrix g = build_g();
  g = g - symmetrize({{matrix_unit(1, 3), 1}, {matrix_unit(2, 1), 1}, {matrix_unit(3, 2), 1}}, 3);
  g = g + symmetrize({{matrix_unit(1, 3), 1}, {matrix_unit(3, 2), 1}, {matrix_unit(2, 1), 1}}, 3);
  return g;
}

struct HighestWeightTensor {
  int ell = 0;
  int m = 0;
  SparseMatrix matrix;  // 3^d x 3^d
};

// Symmetrization of e13^(d-3l-2m) x f^m x g^l: a two-sided highest weight
// tensor of left weight (d-3l-2m, m) and right weight (m, d-3l-2m).
inline HighestWeightTensor build_h(int d, int ell, int m) {
  if (ell < 0 || m < 0 || 3 * ell + 2 * m > d) throw DomainError("build_h: need 3*ell + 2*m <= d");
  const int a = d - 3 * ell - 2 * m;
  std::vector<std::pair<SparseMatrix, int>> factors;
  if (a > 0) factors.emplace_back(matrix_unit(1, 3), a);
  if (m > 0) factors.emplace_back(build_f(), m);
  if (ell > 0) factors.emplace_back(build_g(), ell);
  HighestWeightTensor h{ell, m, symmetrize(factors, d)};
  if (h.matrix.is_zero()) throw IntegrityError("build_h: tensor came out zero");
  return h;
}

// ---------------------------------------------------------------------------
// Two-sided highest weight verification

struct HwTensorCheck {
  bool annihilated = false;      // lift(N) h = h lift(N) = 0 for basis nilpotents
  bool eigen_exact = false;      // lift(D) h and h lift(D) are exact multiples of h
  Weight left;                   // measured from lift(D1(1,0)), lift(D1(0,1))
  Weight right;                  // measured from right action of D1(-1,0), D1(0,-1)
  bool pass = false;
  std::string detail;
};

namespace detail {

inline bool matrix_multiple_of(const SparseMatrix& x, const SparseMatrix& h, Rat& c) {
  // h is nonzero by construction
  index_t i0 = 0;
  while (h.row(i0).empty()) ++i0;
  const auto& e0 = h.row(i0).front();
  c = x.at(i0, e0.first) / e0.second;
  return x == c * h;
}

}  // namespace detail

inline HwTensorCheck verify_hw_tensor(const HighestWeightTensor& h, int d) {
  HwTensorCheck chk;
  const SparseMatrix nil[3] = {nilpotent_upper(rat(1), rat(0), rat(0)),
                               nilpotent_upper(rat(0), rat(1), rat(0)),
                               nilpotent_upper(rat(0), rat(0), rat(1))};
  chk.annihilated = true;
  for (const auto& n : nil) {
    const SparseMatrix ln = lift(n, d);
    if (!(ln * h.matrix).is_zero() || !(h.matrix * ln).is_zero()) chk.annihilated = false;
  }
  Rat l1, l2, r1, r2;
  bool ok = true;
  ok &= detail::matrix_multiple_of(lift(cartan_diag(rat(1), rat(0)), d) * h.matrix, h.matrix, l1);
  ok &= detail::matrix_multiple_of(lift(cartan_diag(rat(0), rat(1)), d) * h.matrix, h.matrix, l2);
  ok &= detail::matrix_multiple_of(h.matrix * lift(cartan_diag(rat(-1), rat(0)), d), h.matrix, r1);
  ok &= detail::matrix_multiple_of(h.matrix * lift(cartan_diag(rat(0), rat(-1)), d), h.matrix, r2);
  chk.eigen_exact = ok;
  auto as_long = [](const Rat& q) {
    if (q.get_den() != 1) throw IntegrityError("verify_hw_tensor: non-integer weight");
    return to_i64(q.get_num());
  };
  if (ok) {
    chk.left = {as_long(l1), as_long(l2)};
    chk.right = {as_long(r1), as_long(r2)};
  }
  const long a = d - 3 * h.ell - 2 * h.m;
  chk.pass = chk.annihilated && chk.eigen_exact && chk.left == Weight{a, h.m} &&
             chk.right == Weight{h.m, a};
  chk.detail = "measured left weight (" + std::to_string(chk.left.m1) + "," +
               std::to_string(chk.left.m2) + "), right weight (" + std::to_string(chk.right.m1) +
               "," + std::to_string(chk.right.m2) + ")";
  return chk;
}

// ---------------------------------------------------------------------------
// Algebra membership checks (closure basis supplied by the caller)

inline bool check_lift_membership(const SparseMatrix& m, int d, RowSpace& algebra) {
  return algebra.contains(flatten(lift(m, d)));
}

inline bool check_tensor_power_membership(const SparseMatrix& m, int d, RowSpace& algebra) {
  SparseMatrix p = SparseMatrix::identity(1);
  for (int i = 0; i < d; ++i) p = kron(p, m);
  return algebra.contains(flatten(p));
}

// ---------------------------------------------------------------------------
// Wedderburn block profile (pure integer arithmetic)

struct WedderburnBlock {
  int ell = 0;
  int m = 0;
  long long block_dim = 0;
};

struct WedderburnProfile {
  int d = 0;
  std::vector<WedderburnBlock> blocks;  // (ell, m) ascending
  long long total_dim = 0;              // sum of block_dim^2 == C(d+8, 8)
};

inline WedderburnProfile wedderburn_profile(int d) {
  if (d < 0) throw DomainError("wedderburn_profile: negative d");
  WedderburnProfile prof;
  prof.d = d;
  Int total = 0;
  for (int ell = 0; 3 * ell <= d; ++ell)
    for (int m = 0; 2 * m <= d - 3 * ell; ++m) {
      long long dim = static_cast<long long>(d - 3 * ell - 2 * m + 1) * (m + 1) *
                      (d - 3 * ell - m + 2) / 2;
      prof.blocks.push_back({ell, m, dim});
      total += int_of(dim) * int_of(dim);
    }
  Int expected = binomial(static_cast<unsigned long>(d) + 8, 8);
  if (total != expected)
    throw IntegrityError("wedderburn_profile: block dimension count failed at d=" +
                         std::to_string(d));
  prof.total_dim = to_i64(total);
  return prof;
}

}  // namespace twalg
