#pragma once

#include <span>
#include <utility>
#include <vector>

#include "mz/polynomial.hpp"

namespace mz {

// Roots of one eliminant f_i(x_i) with multiplicities.
struct RootList {
  int var = 0;
  std::vector<std::pair<Scalar, int>> roots;  // sorted by root value

  int degree() const;  // sum of multiplicities
};

// The grid Lambda = Lambda_1 x ... x Lambda_n, after the coordinate shift.
struct PointSpectrum {
  std::vector<RootList> per_var;
  std::vector<std::vector<int>> points;  // root-index tuples, lexicographic
  std::vector<Scalar> shift;             // applied shift (c_1..c_n)

  std::size_t size() const { return points.size(); }
  std::vector<Scalar> point(std::size_t p) const;
  std::vector<int> multiplicity(std::size_t p) const;  // m(lambda)
};

// pairwise-coprime monic square-free factors (h_j, j) with f = prod h_j^j
std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& f, int var);

// All roots with multiplicities, provided f splits into linear factors over
// the rationals; throws NonSplittingError otherwise. Verified by exact
// reconstruction of f from the root list.
RootList rational_roots(const Polynomial& f, int var);

// smallest non-negative integer c_i with lambda_i + c_i != 0 for all roots
std::vector<Scalar> choose_shift(const std::vector<RootList>& rootlists);

enum class ShiftDirection { Forward, Inverse };

// forward: x_i -> x_i - c_i; inverse: x_i -> x_i + c_i
Polynomial apply_shift(const Polynomial& f, std::span<const Scalar> c, ShiftDirection dir);

RootList shift_roots(const RootList& rl, const Scalar& c);

// rootlists must already be shifted: no root may be zero
PointSpectrum build_point_spectrum(std::vector<RootList> rootlists, std::vector<Scalar> shift);

}  // namespace mz
