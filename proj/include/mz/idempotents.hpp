#pragma once

#include <string>
#include <vector>

#include "mz/groebner.hpp"
#include "mz/spectrum.hpp"

namespace mz {

// The polynomials g_lambda whose residues form the orthogonal basis of
// idempotents of A; stored as normal forms, parallel to the spectrum points.
struct IdempotentFamily {
  std::vector<Polynomial> g;
};

// Per root lambda of f_i: the univariate h with h = 1 mod (x_i-lambda)^m and
// h = 0 mod every other local factor, via extended Euclid on the coprime
// pair ((x_i-lambda)^m, f_i / (x_i-lambda)^m). Parallel to rl.roots.
std::vector<Polynomial> univariate_crt_factors(const RootList& rl, int nvars);

// tensor construction: g_lambda = NF(prod_i h_{i,lambda_i})
IdempotentFamily build_g_lambda(const PointSpectrum& sp, const QuotientData& q);

// pairwise construction g_lambda = NF(prod_{mu != lambda} i_mu); agrees with
// the tensor construction, kept for cross-checking
IdempotentFamily build_g_lambda_pairwise(const PointSpectrum& sp, const QuotientData& q);

struct FamilyReport {
  bool ok = true;
  std::string violation;
};

// re-derives every family invariant by exact normal-form computation
FamilyReport verify_family(const IdempotentFamily& fam, const PointSpectrum& sp,
                           const QuotientData& q);

}  // namespace mz
