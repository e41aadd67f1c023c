#include "mz/oracle.hpp"

#include <cassert>

#include "mz/errors.hpp"
#include "mz/matrix.hpp"

namespace mz {

AlgebraTable multiplication_table(const QuotientData& q) {
  AlgebraTable t;
  t.d = q.dimension;
  const std::size_t d = static_cast<std::size_t>(q.dimension);
  t.prod.assign(d, std::vector<std::vector<Scalar>>(d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      Polynomial p = Polynomial::term(mono_mul(q.staircase[i], q.staircase[j]), Scalar(1));
      t.prod[i][j] = staircase_coords(normal_form(p, q.gb), q);
    }
  }
  return t;
}

std::vector<std::vector<int>> enumerate_subsets(int n, std::size_t cap) {
  if (static_cast<std::size_t>(n) > cap)
    throw SubsetBudgetExceeded(static_cast<std::size_t>(n), cap);
  std::vector<std::vector<int>> out;
  for (int size = 1; size <= n; ++size) {
    std::vector<int> idx(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
      out.push_back(idx);
      int i = size - 1;
      while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - size + i) --i;
      if (i < 0) break;
      ++idx[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < size; ++j)
        idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return out;
}

OracleResult brute_force_decide(const IdempotentFamily& fam, const ReducedSubspace& vbasis,
                                const AlgebraTable& table, const QuotientData& q,
                                std::size_t subset_cap) {
  const std::size_t d = static_cast<std::size_t>(q.dimension);
  RowEchelon membership(d);
  for (const auto& row : vbasis.coords) membership.insert(row);

  std::vector<std::vector<Scalar>> gcoords;
  gcoords.reserve(fam.g.size());
  for (const Polynomial& g : fam.g) gcoords.push_back(staircase_coords(g, q));

  OracleResult res;
  for (const std::vector<int>& subset :
       enumerate_subsets(static_cast<int>(fam.g.size()), subset_cap)) {
    std::vector<Scalar> e(d, Scalar(0));
    for (int p : subset)
      for (std::size_t c = 0; c < d; ++c) e[c] += gcoords[static_cast<std::size_t>(p)][c];
    if (!membership.contains(e)) continue;
    res.members.push_back(subset);
    // the whole ideal A e must lie inside V-bar
    for (std::size_t m = 0; m < d; ++m) {
      std::vector<Scalar> prod(d, Scalar(0));
      for (std::size_t c = 0; c < d; ++c) {
        if (e[c] == 0) continue;
        for (std::size_t out = 0; out < d; ++out) prod[out] += e[c] * table.prod[m][c][out];
      }
      if (!membership.contains(prod)) {
        res.is_mz = false;
        res.subset = subset;
        res.escape_monomial = q.staircase[m];
        return res;
      }
    }
  }
  return res;
}

}  // namespace mz
