#pragma once

#include <optional>
#include <vector>

#include "mz/dualspace.hpp"
#include "mz/groebner.hpp"
#include "mz/idempotents.hpp"

namespace mz {

// A as explicit data: structure constants on the staircase basis.
struct AlgebraTable {
  long d = 0;
  // prod[i][j] = staircase coordinates of basis_i * basis_j
  std::vector<std::vector<std::vector<Scalar>>> prod;
};

AlgebraTable multiplication_table(const QuotientData& q);

// Independent brute-force decision via Zhao's idempotency theorem: V-bar is
// an MZ-space iff every idempotent e of A lying in V-bar has A e inside
// V-bar. The idempotents of A are exactly the subset sums of the g_lambda.
struct OracleResult {
  bool is_mz = true;
  // witness when not MZ: the subset whose idempotent lies in V-bar and the
  // staircase monomial whose multiple escapes
  std::vector<int> subset;
  std::optional<Monomial> escape_monomial;
  // every subset whose idempotent was found inside V-bar
  std::vector<std::vector<int>> members;
};

OracleResult brute_force_decide(const IdempotentFamily& fam, const ReducedSubspace& vbasis,
                                const AlgebraTable& table, const QuotientData& q,
                                std::size_t subset_cap = 20);

// deterministic subset order: by size, then lexicographic on index tuples
std::vector<std::vector<int>> enumerate_subsets(int n, std::size_t cap);

}  // namespace mz
