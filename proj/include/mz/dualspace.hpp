#pragma once

#include <vector>

#include "mz/groebner.hpp"
#include "mz/matrix.hpp"
#include "mz/spectrum.hpp"

namespace mz {

// V = I + k v_1 + ... + k v_h with I presented by its eliminants.
struct SubspaceSpec {
  std::vector<Polynomial> eliminants;  // f_i monic univariate in x_i, degree >= 1
  std::vector<Polynomial> vectors;
};

// Exact basis of V-bar = V/I on staircase coordinates (RREF rows).
struct ReducedSubspace {
  std::vector<Polynomial> basis;
  std::vector<std::vector<Scalar>> coords;
  int dropped = 0;  // dependent vectors and ideal members discarded
};

ReducedSubspace reduce_subspace(const std::vector<Polynomial>& vectors, const QuotientData& q);

// One elementary functional S_lambda o D^j per key; j < m(lambda).
struct ElementaryKey {
  int point = 0;
  std::vector<Scalar> lambda;
  Monomial j;
};

// canonical enumeration: points in spectrum order, j in graded-lex order
std::vector<ElementaryKey> elementary_keys(const PointSpectrum& sp);

// Rows indexed by elementary keys, columns by staircase monomials; the entry
// at (key, x^m) is the value (D^j x^m)(lambda) = m^j lambda^m with 0^0 = 1.
// Invertible for every valid spectrum; throws SingularMatrixError otherwise.
QMatrix elementary_matrix(const PointSpectrum& sp, const QuotientData& q);

// The functional system L = (L_1..L_r) with ker L = V on A.
struct FunctionalSystem {
  std::vector<ElementaryKey> keys;            // d keys, canonical order
  std::vector<std::size_t> point_key_offset;  // index of the j = 0 key per point
  std::vector<std::vector<Scalar>> coeffs;    // r x d coefficient tables p_{lambda,j}
  std::vector<std::vector<Scalar>> values;    // r x d values on staircase monomials
  ReducedSubspace vbasis;

  int r() const { return static_cast<int>(coeffs.size()); }
};

// Exact nullspace of the annihilation constraints L(v) = 0, v in the reduced
// subspace basis, normalized to reduced row echelon form.
FunctionalSystem annihilator_functionals(ReducedSubspace vbasis, const QMatrix& M,
                                         const QuotientData& q, const PointSpectrum& sp);

// sum over keys of p_{lambda,j} (D^j f)(lambda), computed on the raw f
Scalar evaluate_functional(const FunctionalSystem& sys, int i, const Polynomial& f);

// L_i(g_lambda) = P_lambda(0): a table lookup
Scalar functional_at_idempotent(const FunctionalSystem& sys, int i, int point);

}  // namespace mz
