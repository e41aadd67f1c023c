#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mz/scalar.hpp"

namespace mz {

// Dense exact rational matrix, row-major.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}

  static QMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Scalar> row(std::size_t r) const;
  QMatrix transposed() const;
  std::vector<Scalar> mul(std::span<const Scalar> v) const;  // M v

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

// in-place reduced row echelon form; returns pivot columns
std::vector<std::size_t> rref(QMatrix& m);
std::size_t rank(QMatrix m);
Scalar determinant(QMatrix m);

// Canonical nullspace basis: rows of the result are in reduced row echelon
// form with pivots 1, in deterministic column order.
std::vector<std::vector<Scalar>> nullspace(const QMatrix& m);

// Incremental exact row reduction; rows kept pivot-normalized.
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t cols) : cols_(cols) {}

  // eliminate the known pivots from v
  std::vector<Scalar> reduce(std::vector<Scalar> v) const;
  bool insert(std::vector<Scalar> v);  // true iff the rank grew
  bool contains(std::vector<Scalar> v) const;

  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  // fully back-eliminated rows, sorted by pivot column
  std::vector<std::vector<Scalar>> rref_rows() const;

 private:
  std::size_t cols_;
  std::vector<std::vector<Scalar>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace mz
