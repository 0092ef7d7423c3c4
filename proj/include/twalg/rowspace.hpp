// Exact echelon row spaces over the rationals.
//
// Rows are stored as primitive integer vectors (denominators cleared, content
// divided out), and elimination uses fraction-free two-term updates with
// leftmost-nonzero pivot selection.  canonicalize() back-reduces to the unique
// reduced form: rows sorted by pivot column, each primitive with positive
// leading coefficient and zeros in every other pivot column.  That form
// depends only on the row space, not on insertion order, which is what makes
// golden outputs and multiplicity counts reproducible.
#pragma once

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "twalg/errors.hpp"
#include "twalg/sparse.hpp"

namespace twalg {

using IEntry = std::pair<index_t, Int>;
using IRow = std::vector<IEntry>;  // sorted by index, nonzero values

namespace detail {

// Divides by the gcd of all values; flips sign so the leading value is > 0.
inline void make_primitive(IRow& r) {
  if (r.empty()) return;
  Int g = 0;
  for (const auto& e : r) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.second.get_mpz_t());
    if (g == 1) break;
  }
  bool flip = sgn(r.front().second) < 0;
  if (g == 1 && !flip) return;
  for (auto& e : r) {
    if (g != 1) e.second /= g;
    if (flip) e.second = -e.second;
  }
}

// a*x + b*y, merged; result not normalized.
inline IRow irow_combine(const Int& a, const IRow& x, const Int& b, const IRow& y) {
  IRow r;
  r.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j >= y.size() || (i < x.size() && x[i].first < y[j].first)) {
      Int v = a * x[i].second;
      if (v != 0) r.emplace_back(x[i].first, std::move(v));
      ++i;
    } else if (i >= x.size() || y[j].first < x[i].first) {
      Int v = b * y[j].second;
      if (v != 0) r.emplace_back(y[j].first, std::move(v));
      ++j;
    } else {
      Int v = a * x[i].second + b * y[j].second;
      if (v != 0) r.emplace_back(x[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return r;
}

// Clears denominators and strips content.
inline IRow irow_from(const SparseVec& v) {
  Int l = 1;
  for (const auto& e : v.ent) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.second.get_den().get_mpz_t());
  IRow r;
  r.reserve(v.ent.size());
  for (const auto& e : v.ent) {
    Int num = e.second.get_num() * (l / e.second.get_den());
    r.emplace_back(e.first, std::move(num));
  }
  make_primitive(r);
  return r;
}

}  // namespace detail

class RowSpace {
 public:
  explicit RowSpace(index_t ambient) : ambient_(ambient) {}

  index_t ambient() const { return ambient_; }
  index_t rank() const { return static_cast<index_t>(rows_.size()); }

  // Adjoins v; returns true iff the rank grew.
  bool insert(const SparseVec& v) {
    if (v.dim != ambient_) throw ShapeError("RowSpace::insert: dimension mismatch");
    IRow r = detail::irow_from(v);
    reduce(r);
    if (r.empty()) return false;
    detail::make_primitive(r);
    pivot_[r.front().first] = static_cast<index_t>(rows_.size());
    rows_.push_back(std::move(r));
    canonical_ = false;
    return true;
  }

  bool contains(const SparseVec& v) const {
    if (v.dim != ambient_) throw ShapeError("RowSpace::contains: dimension mismatch");
    IRow r = detail::irow_from(v);
    reduce(r);
    return r.empty();
  }

  // Back-reduces to the unique reduced basis of the row space.
  void canonicalize() {
    if (canonical_) return;
    std::sort(rows_.begin(), rows_.end(),
              [](const IRow& a, const IRow& b) { return a.front().first < b.front().first; });
    pivot_.clear();
    for (std::size_t i = 0; i < rows_.size(); ++i) pivot_[rows_[i].front().first] = static_cast<index_t>(i);
    for (std::size_t i = rows_.size(); i-- > 0;) {
      const index_t pc = rows_[i].front().first;
      const Int& pv = rows_[i].front().second;
      for (std::size_t j = 0; j < i; ++j) {
        auto& row = rows_[j];
        auto it = std::lower_bound(row.begin(), row.end(), pc,
                                   [](const IEntry& e, index_t k) { return e.first < k; });
        if (it == row.end() || it->first != pc) continue;
        row = detail::irow_combine(pv, row, -it->second, rows_[i]);
        detail::make_primitive(row);
      }
    }
    canonical_ = true;
  }

  // Canonical basis rows as rational vectors (primitive integer entries).
  std::vector<SparseVec> basis() {
    canonicalize();
    std::vector<SparseVec> out;
    out.reserve(rows_.size());
    for (const auto& r : rows_) {
      SparseVec v(ambient_);
      v.ent.reserve(r.size());
      for (const auto& e : r) v.ent.emplace_back(e.first, rat(e.second));
      out.push_back(std::move(v));
    }
    return out;
  }

  std::vector<index_t> pivot_columns() {
    canonicalize();
    std::vector<index_t> p;
    p.reserve(rows_.size());
    for (const auto& r : rows_) p.push_back(r.front().first);
    return p;
  }

  // Reduced-echelon kernel of the matrix whose row space this is: one vector
  // per free column f, with 1 at f and -beta/alpha at each pivot column.
  std::vector<SparseVec> kernel() {
    canonicalize();
    std::vector<bool> is_pivot(static_cast<std::size_t>(ambient_), false);
    for (const auto& r : rows_) is_pivot[static_cast<std::size_t>(r.front().first)] = true;
    std::vector<SparseVec> out;
    for (index_t f = 0; f < ambient_; ++f) {
      if (is_pivot[static_cast<std::size_t>(f)]) continue;
      std::vector<Entry> raw;
      raw.emplace_back(f, rat(1));
      for (const auto& r : rows_) {
        auto it = std::lower_bound(r.begin(), r.end(), f,
                                   [](const IEntry& e, index_t k) { return e.first < k; });
        if (it != r.end() && it->first == f)
          raw.emplace_back(r.front().first, rat(-it->second, r.front().second));
      }
      out.push_back(SparseVec::make(ambient_, std::move(raw)));
    }
    return out;
  }

  // Canonical bases are unique, so equality of spans is equality of rows.
  friend bool same_row_space(RowSpace& a, RowSpace& b) {
    if (a.ambient_ != b.ambient_ || a.rank() != b.rank()) return false;
    a.canonicalize();
    b.canonicalize();
    return a.rows_ == b.rows_;
  }

 private:
  void reduce(IRow& r) const {
    while (!r.empty()) {
      auto it = pivot_.find(r.front().first);
      if (it == pivot_.end()) return;
      const IRow& p = rows_[static_cast<std::size_t>(it->second)];
      r = detail::irow_combine(p.front().second, r, -r.front().second, p);
      detail::make_primitive(r);
    }
  }

  index_t ambient_;
  std::vector<IRow> rows_;
  std::unordered_map<index_t, index_t> pivot_;
  bool canonical_ = false;
};

// ---------------------------------------------------------------------------
// Matrix-level wrappers

inline index_t rank(const SparseMatrix& m) {
  RowSpace rs(m.ncols());
  for (index_t i = 0; i < m.nrows(); ++i) rs.insert(m.row_as_vec(i));
  return rs.rank();
}

inline std::vector<SparseVec> nullspace_basis(const SparseMatrix& m) {
  RowSpace rs(m.ncols());
  for (index_t i = 0; i < m.nrows(); ++i) rs.insert(m.row_as_vec(i));
  return rs.kernel();
}

inline bool in_span(const SparseVec& v, const std::vector<SparseVec>& basis) {
  RowSpace rs(v.dim);
  for (const auto& b : basis) {
    if (b.dim != v.dim) throw ShapeError("in_span: dimension mismatch");
    rs.insert(b);
  }
  return rs.contains(v);
}

}  // namespace twalg
