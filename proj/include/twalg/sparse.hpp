// Sparse vectors and matrices with exact rational entries.
//
// Entries are kept sorted by index with no explicit zeros, so value equality
// of two objects is equality of their entry lists.  All operations are pure;
// nothing here mutates shared state.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "twalg/errors.hpp"
#include "twalg/rational.hpp"

namespace twalg {

using index_t = std::int64_t;
using Entry = std::pair<index_t, Rat>;

// ---------------------------------------------------------------------------
// SparseVec

struct SparseVec {
  index_t dim = 0;
  std::vector<Entry> ent;  // strictly increasing indices, all values nonzero

  SparseVec() = default;
  explicit SparseVec(index_t n) : dim(n) {}

  static SparseVec unit(index_t n, index_t i) {
    SparseVec v(n);
    v.ent.emplace_back(i, rat(1));
    return v;
  }

  // Builds from possibly unsorted entries; duplicates accumulate.
  static SparseVec make(index_t n, std::vector<Entry> raw) {
    std::sort(raw.begin(), raw.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    SparseVec v(n);
    for (auto& e : raw) {
      if (e.first < 0 || e.first >= n) throw ShapeError("SparseVec: index out of range");
      if (!v.ent.empty() && v.ent.back().first == e.first) {
        v.ent.back().second += e.second;
        if (v.ent.back().second == 0) v.ent.pop_back();
      } else if (e.second != 0) {
        v.ent.emplace_back(std::move(e));
      }
    }
    return v;
  }

  bool is_zero() const { return ent.empty(); }
  index_t nnz() const { return static_cast<index_t>(ent.size()); }

  Rat at(index_t i) const {
    auto it = std::lower_bound(ent.begin(), ent.end(), i,
                               [](const Entry& e, index_t k) { return e.first < k; });
    if (it != ent.end() && it->first == i) return it->second;
    return rat(0);
  }

  friend bool operator==(const SparseVec& a, const SparseVec& b) {
    return a.dim == b.dim && a.ent == b.ent;
  }
};

// a*x + b*y
inline SparseVec vec_combine(const Rat& a, const SparseVec& x, const Rat& b, const SparseVec& y) {
  if (x.dim != y.dim) throw ShapeError("vec_combine: dimension mismatch");
  SparseVec r(x.dim);
  r.ent.reserve(x.ent.size() + y.ent.size());
  std::size_t i = 0, j = 0;
  while (i < x.ent.size() || j < y.ent.size()) {
    Rat v;
    index_t k;
    if (j >= y.ent.size() || (i < x.ent.size() && x.ent[i].first < y.ent[j].first)) {
      k = x.ent[i].first;
      v = a * x.ent[i].second;
      ++i;
    } else if (i >= x.ent.size() || y.ent[j].first < x.ent[i].first) {
      k = y.ent[j].first;
      v = b * y.ent[j].second;
      ++j;
    } else {
      k = x.ent[i].first;
      v = a * x.ent[i].second + b * y.ent[j].second;
      ++i;
      ++j;
    }
    if (v != 0) r.ent.emplace_back(k, std::move(v));
  }
  return r;
}

inline SparseVec operator+(const SparseVec& x, const SparseVec& y) {
  return vec_combine(rat(1), x, rat(1), y);
}
inline SparseVec operator-(const SparseVec& x, const SparseVec& y) {
  return vec_combine(rat(1), x, rat(-1), y);
}
inline SparseVec operator*(const Rat& a, const SparseVec& x) {
  SparseVec r(x.dim);
  if (a == 0) return r;
  r.ent.reserve(x.ent.size());
  for (const auto& e : x.ent) r.ent.emplace_back(e.first, a * e.second);
  return r;
}

// Kronecker product of vectors; the left factor carries the most significant
// index digit: index(a (x) b) = ia * b.dim + ib.
inline SparseVec vec_kron(const SparseVec& a, const SparseVec& b) {
  SparseVec r(a.dim * b.dim);
  r.ent.reserve(a.ent.size() * b.ent.size());
  for (const auto& ea : a.ent)
    for (const auto& eb : b.ent)
      r.ent.emplace_back(ea.first * b.dim + eb.first, ea.second * eb.second);
  return r;
}

// ---------------------------------------------------------------------------
// SparseMatrix

class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(index_t nrows, index_t ncols)
      : nrows_(nrows), ncols_(ncols), rows_(static_cast<std::size_t>(nrows)) {
    if (nrows < 0 || ncols < 0) throw ShapeError("SparseMatrix: negative dimension");
  }

  static SparseMatrix identity(index_t n) {
    SparseMatrix m(n, n);
    for (index_t i = 0; i < n; ++i) m.rows_[i].emplace_back(i, rat(1));
    return m;
  }

  static SparseMatrix from_triplets(index_t nrows, index_t ncols,
                                    const std::vector<std::tuple<index_t, index_t, Rat>>& ts) {
    SparseMatrix m(nrows, ncols);
    std::vector<std::vector<Entry>> raw(static_cast<std::size_t>(nrows));
    for (const auto& [r, c, v] : ts) {
      if (r < 0 || r >= nrows || c < 0 || c >= ncols)
        throw ShapeError("from_triplets: index out of range");
      raw[r].emplace_back(c, v);
    }
    for (index_t r = 0; r < nrows; ++r) {
      auto& row = raw[r];
      std::sort(row.begin(), row.end(),
                [](const Entry& a, const Entry& b) { return a.first < b.first; });
      auto& out = m.rows_[r];
      for (auto& e : row) {
        if (!out.empty() && out.back().first == e.first) {
          out.back().second += e.second;
          if (out.back().second == 0) out.pop_back();
        } else if (e.second != 0) {
          out.emplace_back(std::move(e));
        }
      }
    }
    return m;
  }

  index_t nrows() const { return nrows_; }
  index_t ncols() const { return ncols_; }

  index_t nnz() const {
    index_t n = 0;
    for (const auto& r : rows_) n += static_cast<index_t>(r.size());
    return n;
  }

  bool is_zero() const {
    for (const auto& r : rows_)
      if (!r.empty()) return false;
    return true;
  }

  const std::vector<Entry>& row(index_t i) const { return rows_[static_cast<std::size_t>(i)]; }

  Rat at(index_t i, index_t j) const {
    if (i < 0 || i >= nrows_ || j < 0 || j >= ncols_)
      throw ShapeError("SparseMatrix::at: index out of range");
    const auto& r = rows_[static_cast<std::size_t>(i)];
    auto it = std::lower_bound(r.begin(), r.end(), j,
                               [](const Entry& e, index_t k) { return e.first < k; });
    if (it != r.end() && it->first == j) return it->second;
    return rat(0);
  }

  // Adds v to entry (i, j), keeping the row canonical.
  void add_at(index_t i, index_t j, const Rat& v) {
    if (i < 0 || i >= nrows_ || j < 0 || j >= ncols_)
      throw ShapeError("SparseMatrix::add_at: index out of range");
    if (v == 0) return;
    auto& r = rows_[static_cast<std::size_t>(i)];
    auto it = std::lower_bound(r.begin(), r.end(), j,
                               [](const Entry& e, index_t k) { return e.first < k; });
    if (it != r.end() && it->first == j) {
      it->second += v;
      if (it->second == 0) r.erase(it);
    } else {
      r.insert(it, {j, v});
    }
  }

  SparseVec row_as_vec(index_t i) const {
    SparseVec v(ncols_);
    v.ent = rows_[static_cast<std::size_t>(i)];
    return v;
  }

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.nrows_ == b.nrows_ && a.ncols_ == b.ncols_ && a.rows_ == b.rows_;
  }

  friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
    return combine(rat(1), a, rat(1), b);
  }
  friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) {
    return combine(rat(1), a, rat(-1), b);
  }
  friend SparseMatrix operator*(const Rat& s, const SparseMatrix& a) {
    SparseMatrix r(a.nrows_, a.ncols_);
    if (s == 0) return r;
    for (index_t i = 0; i < a.nrows_; ++i) {
      r.rows_[i].reserve(a.rows_[i].size());
      for (const auto& e : a.rows_[i]) r.rows_[i].emplace_back(e.first, s * e.second);
    }
    return r;
  }

  static SparseMatrix combine(const Rat& x, const SparseMatrix& a, const Rat& y,
                              const SparseMatrix& b) {
    if (a.nrows_ != b.nrows_ || a.ncols_ != b.ncols_)
      throw ShapeError("matrix combine: shape mismatch");
    SparseMatrix r(a.nrows_, a.ncols_);
    for (index_t i = 0; i < a.nrows_; ++i) {
      SparseVec va(a.ncols_), vb(a.ncols_);
      va.ent = a.rows_[i];
      vb.ent = b.rows_[i];
      r.rows_[i] = vec_combine(x, va, y, vb).ent;
    }
    return r;
  }

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.ncols_ != b.nrows_) throw ShapeError("matmul: inner dimensions differ");
    SparseMatrix r(a.nrows_, b.ncols_);
    std::map<index_t, Rat> acc;
    for (index_t i = 0; i < a.nrows_; ++i) {
      acc.clear();
      for (const auto& [k, av] : a.rows_[i])
        for (const auto& [j, bv] : b.rows_[static_cast<std::size_t>(k)]) acc[j] += av * bv;
      auto& out = r.rows_[i];
      for (auto& [j, v] : acc)
        if (v != 0) out.emplace_back(j, std::move(v));
    }
    return r;
  }

  friend SparseVec operator*(const SparseMatrix& m, const SparseVec& v) {
    if (m.ncols_ != v.dim) throw ShapeError("matvec: dimension mismatch");
    std::vector<Entry> raw;
    for (index_t i = 0; i < m.nrows_; ++i) {
      const auto& r = m.rows_[static_cast<std::size_t>(i)];
      Rat s = 0;
      std::size_t p = 0, q = 0;
      while (p < r.size() && q < v.ent.size()) {
        if (r[p].first < v.ent[q].first)
          ++p;
        else if (v.ent[q].first < r[p].first)
          ++q;
        else {
          s += r[p].second * v.ent[q].second;
          ++p;
          ++q;
        }
      }
      if (s != 0) raw.emplace_back(i, std::move(s));
    }
    SparseVec out(m.nrows_);
    out.ent = std::move(raw);
    return out;
  }

  SparseMatrix transpose() const {
    SparseMatrix r(ncols_, nrows_);
    for (index_t i = 0; i < nrows_; ++i)
      for (const auto& [j, v] : rows_[static_cast<std::size_t>(i)])
        r.rows_[static_cast<std::size_t>(j)].emplace_back(i, v);
    return r;  // column indices already ascending per row
  }

  Rat trace() const {
    if (nrows_ != ncols_) throw ShapeError("trace: matrix not square");
    Rat t = 0;
    for (index_t i = 0; i < nrows_; ++i) t += at(i, i);
    return t;
  }

  Rat max_abs() const {
    Rat m = 0;
    for (const auto& r : rows_)
      for (const auto& e : r) {
        Rat a = rat_abs(e.second);
        if (a > m) m = a;
      }
    return m;
  }

 private:
  index_t nrows_ = 0;
  index_t ncols_ = 0;
  std::vector<std::vector<Entry>> rows_;
};

inline SparseMatrix commutator(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.nrows() != a.ncols() || b.nrows() != b.ncols() || a.nrows() != b.nrows())
    throw ShapeError("commutator: operands must be square and of equal size");
  return a * b - b * a;
}

inline SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b) {
  std::vector<std::tuple<index_t, index_t, Rat>> ts;
  ts.reserve(static_cast<std::size_t>(a.nnz()) * static_cast<std::size_t>(b.nnz()));
  for (index_t i = 0; i < a.nrows(); ++i)
    for (const auto& [j, av] : a.row(i))
      for (index_t k = 0; k < b.nrows(); ++k)
        for (const auto& [l, bv] : b.row(k))
          ts.emplace_back(i * b.nrows() + k, j * b.ncols() + l, av * bv);
  return SparseMatrix::from_triplets(a.nrows() * b.nrows(), a.ncols() * b.ncols(), ts);
}

inline SparseMatrix matpow(const SparseMatrix& m, index_t k) {
  if (m.nrows() != m.ncols()) throw ShapeError("matpow: matrix not square");
  if (k < 0) throw DomainError("matpow: negative exponent");
  SparseMatrix r = SparseMatrix::identity(m.nrows());
  for (index_t i = 0; i < k; ++i) r = r * m;
  return r;
}

inline SparseMatrix vstack(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.ncols() != b.ncols()) throw ShapeError("vstack: column counts differ");
  std::vector<std::tuple<index_t, index_t, Rat>> ts;
  for (index_t i = 0; i < a.nrows(); ++i)
    for (const auto& [j, v] : a.row(i)) ts.emplace_back(i, j, v);
  for (index_t i = 0; i < b.nrows(); ++i)
    for (const auto& [j, v] : b.row(i)) ts.emplace_back(a.nrows() + i, j, v);
  return SparseMatrix::from_triplets(a.nrows() + b.nrows(), a.ncols(), ts);
}

// Submatrix over explicit row/column index lists (in the given order).
inline SparseMatrix submatrix(const SparseMatrix& m, const std::vector<index_t>& rows,
                              const std::vector<index_t>& cols) {
  std::map<index_t, index_t> colpos;
  for (std::size_t p = 0; p < cols.size(); ++p) colpos[cols[p]] = static_cast<index_t>(p);
  std::vector<std::tuple<index_t, index_t, Rat>> ts;
  for (std::size_t p = 0; p < rows.size(); ++p)
    for (const auto& [j, v] : m.row(rows[p])) {
      auto it = colpos.find(j);
      if (it != colpos.end()) ts.emplace_back(static_cast<index_t>(p), it->second, v);
    }
  return SparseMatrix::from_triplets(static_cast<index_t>(rows.size()),
                                     static_cast<index_t>(cols.size()), ts);
}

// Row-major flattening: entry (i, j) lands at index i*ncols + j.
inline SparseVec flatten(const SparseMatrix& m) {
  SparseVec v(m.nrows() * m.ncols());
  for (index_t i = 0; i < m.nrows(); ++i)
    for (const auto& [j, val] : m.row(i)) v.ent.emplace_back(i * m.ncols() + j, val);
  return v;
}

inline SparseMatrix unflatten(const SparseVec& v, index_t nrows, index_t ncols) {
  if (v.dim != nrows * ncols) throw ShapeError("unflatten: dimension mismatch");
  std::vector<std::tuple<index_t, index_t, Rat>> ts;
  ts.reserve(v.ent.size());
  for (const auto& [k, val] : v.ent) ts.emplace_back(k / ncols, k % ncols, val);
  return SparseMatrix::from_triplets(nrows, ncols, ts);
}

// ---------------------------------------------------------------------------
// Text dump: header "nrows ncols nnz", then one "row col num/den" line per
// entry sorted by (row, col).

inline std::string to_dump(const SparseMatrix& m) {
  std::ostringstream os;
  os << m.nrows() << ' ' << m.ncols() << ' ' << m.nnz() << '\n';
  for (index_t i = 0; i < m.nrows(); ++i)
    for (const auto& [j, v] : m.row(i)) os << i << ' ' << j << ' ' << rat_to_string(v) << '\n';
  return os.str();
}

inline SparseMatrix from_dump(const std::string& text) {
  std::istringstream is(text);
  index_t nrows, ncols, nnz;
  if (!(is >> nrows >> ncols >> nnz)) throw DomainError("from_dump: bad header");
  std::vector<std::tuple<index_t, index_t, Rat>> ts;
  ts.reserve(static_cast<std::size_t>(nnz));
  for (index_t k = 0; k < nnz; ++k) {
    index_t i, j;
    std::string val;
    if (!(is >> i >> j >> val)) throw DomainError("from_dump: truncated entry list");
    ts.emplace_back(i, j, rat_from_string(val));
  }
  return SparseMatrix::from_triplets(nrows, ncols, ts);
}

}  // namespace twalg
