#include "mz/dualspace.hpp"

#include <algorithm>
#include <cassert>

#include "mz/errors.hpp"

namespace mz {

ReducedSubspace reduce_subspace(const std::vector<Polynomial>& vectors, const QuotientData& q) {
  RowEchelon ech(static_cast<std::size_t>(q.dimension));
  for (const Polynomial& v : vectors) {
    Polynomial nf = normal_form(v, q.gb);
    if (nf.is_zero()) continue;
    ech.insert(staircase_coords(nf, q));
  }
  ReducedSubspace out;
  out.coords = ech.rref_rows();
  out.basis.reserve(out.coords.size());
  for (const auto& row : out.coords) out.basis.push_back(from_staircase_coords(row, q));
  out.dropped = static_cast<int>(vectors.size() - out.coords.size());
  return out;
}

std::vector<ElementaryKey> elementary_keys(const PointSpectrum& sp) {
  std::vector<ElementaryKey> keys;
  for (std::size_t p = 0; p < sp.size(); ++p) {
    std::vector<Scalar> lambda = sp.point(p);
    std::vector<int> mult = sp.multiplicity(p);
    std::vector<Monomial> box;
    Monomial j(mult.size(), 0);
    // enumerate {j : j < m(lambda)} and sort graded-lex
    std::size_t total = 1;
    for (int m : mult) total *= static_cast<std::size_t>(m);
    for (std::size_t count = 0; count < total; ++count) {
      box.push_back(j);
      for (std::size_t i = j.size(); i-- > 0;) {
        if (++j[i] < mult[i]) break;
        j[i] = 0;
      }
    }
    std::sort(box.begin(), box.end(), GrlexLess{});
    for (Monomial& b : box) keys.push_back({static_cast<int>(p), lambda, std::move(b)});
  }
  return keys;
}

QMatrix elementary_matrix(const PointSpectrum& sp, const QuotientData& q) {
  std::vector<ElementaryKey> keys = elementary_keys(sp);
  const std::size_t d = static_cast<std::size_t>(q.dimension);
  assert(keys.size() == d);
  QMatrix M(d, d);
  for (std::size_t row = 0; row < d; ++row) {
    const ElementaryKey& key = keys[row];
    for (std::size_t col = 0; col < d; ++col) {
      const Monomial& m = q.staircase[col];
      Scalar entry(1);
      for (std::size_t i = 0; i < key.lambda.size(); ++i) {
        entry *= scalar_pow(Scalar(m[i]), key.j[i]);  // 0^0 = 1
        if (entry == 0) break;
        entry *= scalar_pow(key.lambda[i], m[i]);
      }
      M.at(row, col) = entry;
    }
  }
  if (rank(M) != d) throw SingularMatrixError();
  return M;
}

FunctionalSystem annihilator_functionals(ReducedSubspace vbasis, const QMatrix& M,
                                         const QuotientData& q, const PointSpectrum& sp) {
  const std::size_t d = static_cast<std::size_t>(q.dimension);
  FunctionalSystem sys;
  sys.keys = elementary_keys(sp);
  sys.point_key_offset.assign(sp.size(), 0);
  for (std::size_t k = 0; k < sys.keys.size(); ++k)
    if (total_degree(sys.keys[k].j) == 0)
      sys.point_key_offset[static_cast<std::size_t>(sys.keys[k].point)] = k;

  // constraint rows: L(p)(w) = p . (M c_w) for each basis vector w
  QMatrix constraints(vbasis.coords.size(), d);
  for (std::size_t w = 0; w < vbasis.coords.size(); ++w) {
    std::vector<Scalar> u = M.mul(vbasis.coords[w]);
    for (std::size_t c = 0; c < d; ++c) constraints.at(w, c) = std::move(u[c]);
  }
  sys.coeffs = nullspace(constraints);
  assert(sys.coeffs.size() == d - vbasis.coords.size());

  QMatrix Mt = M.transposed();
  sys.values.reserve(sys.coeffs.size());
  for (const auto& p : sys.coeffs) sys.values.push_back(Mt.mul(p));
  sys.vbasis = std::move(vbasis);
  return sys;
}

Scalar evaluate_functional(const FunctionalSystem& sys, int i, const Polynomial& f) {
  assert(i >= 0 && i < sys.r());
  Scalar acc(0);
  for (std::size_t k = 0; k < sys.keys.size(); ++k) {
    const Scalar& p = sys.coeffs[static_cast<std::size_t>(i)][k];
    if (p == 0) continue;
    const ElementaryKey& key = sys.keys[k];
    Polynomial g = apply_P_of_D(Polynomial::term(key.j, Scalar(1)), f);
    acc += p * g.evaluate(key.lambda);
  }
  return acc;
}

Scalar functional_at_idempotent(const FunctionalSystem& sys, int i, int point) {
  assert(i >= 0 && i < sys.r());
  std::size_t k = sys.point_key_offset[static_cast<std::size_t>(point)];
  assert(total_degree(sys.keys[k].j) == 0);
  return sys.coeffs[static_cast<std::size_t>(i)][k];
}

}  // namespace mz
