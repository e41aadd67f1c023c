#include "mz/matrix.hpp"

#include <algorithm>
#include <cassert>

namespace mz {

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

std::vector<Scalar> QMatrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

QMatrix QMatrix::transposed() const {
  QMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

std::vector<Scalar> QMatrix::mul(std::span<const Scalar> v) const {
  assert(v.size() == cols_);
  std::vector<Scalar> out(rows_, Scalar(0));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (at(r, c) != 0) out[r] += at(r, c) * v[c];
  return out;
}

std::vector<std::size_t> rref(QMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m.at(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(sel, c), m.at(row, c));
    Scalar inv = Scalar(1) / m.at(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m.at(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m.at(r, col) == 0) continue;
      Scalar f = m.at(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m.at(r, c) -= f * m.at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(QMatrix m) { return rref(m).size(); }

Scalar determinant(QMatrix m) {
  assert(m.rows() == m.cols());
  std::size_t n = m.rows();
  Scalar det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && m.at(sel, col) == 0) ++sel;
    if (sel == n) return Scalar(0);
    if (sel != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m.at(sel, c), m.at(col, c));
      det = -det;
    }
    det *= m.at(col, col);
    Scalar inv = Scalar(1) / m.at(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m.at(r, col) == 0) continue;
      Scalar f = m.at(r, col) * inv;
      for (std::size_t c = col; c < n; ++c) m.at(r, c) -= f * m.at(col, c);
    }
  }
  return det;
}

std::vector<std::vector<Scalar>> nullspace(const QMatrix& m) {
  QMatrix r = m;
  std::vector<std::size_t> pivots = rref(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : pivots) is_pivot[p] = true;

  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(m.cols(), Scalar(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r.at(i, free);
    basis.push_back(std::move(v));
  }
  // canonicalize: basis rows in reduced row echelon form
  RowEchelon ech(m.cols());
  for (auto& v : basis) ech.insert(std::move(v));
  return ech.rref_rows();
}

std::vector<Scalar> RowEchelon::reduce(std::vector<Scalar> v) const {
  assert(v.size() == cols_);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Scalar& c = v[pivots_[i]];
    if (c == 0) continue;
    Scalar f = c;  // rows are pivot-normalized
    for (std::size_t j = pivots_[i]; j < cols_; ++j)
      if (rows_[i][j] != 0) v[j] -= f * rows_[i][j];
  }
  return v;
}

bool RowEchelon::insert(std::vector<Scalar> v) {
  v = reduce(std::move(v));
  std::size_t p = 0;
  while (p < cols_ && v[p] == 0) ++p;
  if (p == cols_) return false;
  Scalar inv = Scalar(1) / v[p];
  for (std::size_t j = p; j < cols_; ++j) v[j] *= inv;
  // keep rows sorted by pivot column
  std::size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
  pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), p);
  return true;
}

bool RowEchelon::contains(std::vector<Scalar> v) const {
  v = reduce(std::move(v));
  return std::all_of(v.begin(), v.end(), [](const Scalar& c) { return c == 0; });
}

std::vector<std::vector<Scalar>> RowEchelon::rref_rows() const {
  std::vector<std::vector<Scalar>> out = rows_;
  // back-eliminate: clear pivot columns above each pivot
  for (std::size_t i = out.size(); i-- > 0;) {
    for (std::size_t r = 0; r < i; ++r) {
      const Scalar& c = out[r][pivots_[i]];
      if (c == 0) continue;
      Scalar f = c;
      for (std::size_t j = pivots_[i]; j < cols_; ++j)
        if (out[i][j] != 0) out[r][j] -= f * out[i][j];
    }
  }
  return out;
}

}  // namespace mz
