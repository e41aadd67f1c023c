#pragma once

#include <optional>
#include <vector>

#include "mz/dualspace.hpp"
#include "mz/groebner.hpp"
#include "mz/idempotents.hpp"
#include "mz/spectrum.hpp"

namespace mz {

// points lambda with L(g_lambda) = 0, i.e. g_lambda in V
struct LambdaZero {
  std::vector<int> points;  // indices into the spectrum, ascending

  bool contains(int p) const;
};

enum class CertificateKind { MzAudit, FailConditionI, FailConditionII };

struct Certificate {
  CertificateKind kind = CertificateKind::MzAudit;
  // FailConditionI: nonempty S inside Lambda \ Lambda_0 whose constant
  // coefficient sums vanish for every functional
  std::vector<int> subset;
  // FailConditionII: the witness triple and its nonzero value
  int point = -1;
  Monomial monomial;
  int functional = -1;
  Scalar value;
};

struct DecideOptions {
  std::size_t subset_cap = 20;
  std::optional<std::vector<Scalar>> shift_override;
};

struct Verdict {
  bool is_mz = false;
  PointSpectrum spectrum;  // post-shift Lambda with multiplicities + shift used
  LambdaZero lambda0;
  Certificate certificate;
  // audit
  long dimension = 0;
  int r = 0;
  int subspace_dim = 0;  // dim V-bar after reduction
  int dropped_vectors = 0;
  std::size_t gb_size = 0;
  std::vector<Polynomial> eliminants;          // pre-shift f_i
  std::vector<Polynomial> shifted_eliminants;  // post-shift
};

// verdict plus every intermediate, for audits and cross-checks
struct DecideResult {
  Verdict verdict;
  GroebnerBasis input_gb;                 // of the user's ideal presentation
  std::vector<Polynomial> extra_vectors;  // appended span of I modulo J (pre-shift)
  QuotientData quotient;                  // of the shifted eliminant ideal
  IdempotentFamily family;
  FunctionalSystem system;
};

LambdaZero compute_lambda0(const FunctionalSystem& sys, const PointSpectrum& sp);

// nullopt = pass; throws SubsetBudgetExceeded when |Lambda \ Lambda_0| > cap
std::optional<Certificate> check_condition_i(const FunctionalSystem& sys, const LambdaZero& l0,
                                             const PointSpectrum& sp, std::size_t subset_cap);

// singleton form: L_i(x^m g_lambda) = 0 for lambda in Lambda_0, m on the
// staircase, all i; nullopt = pass
std::optional<Certificate> check_condition_ii(const FunctionalSystem& sys, const LambdaZero& l0,
                                              const IdempotentFamily& fam, const QuotientData& q);

// literal form quantified over every subset Lambda'; for the equivalence test
std::optional<Certificate> check_condition_ii_all_subsets(const FunctionalSystem& sys,
                                                          const LambdaZero& l0,
                                                          const IdempotentFamily& fam,
                                                          const QuotientData& q,
                                                          std::size_t subset_cap);

// full pipeline from an eliminant presentation
DecideResult decide(const SubspaceSpec& spec, const DecideOptions& options = {});

// full pipeline from arbitrary ideal generators: Groebner basis, finiteness
// check, eliminants, re-presentation of I modulo J, then decide
DecideResult decide_generators(const std::vector<Polynomial>& gens,
                               const std::vector<Polynomial>& vectors,
                               const DecideOptions& options = {});

// recompute a FAIL certificate's defining sums/evaluations
bool reverify_certificate(const DecideResult& res);

}  // namespace mz
