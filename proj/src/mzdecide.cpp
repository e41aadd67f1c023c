#include "mz/mzdecide.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "mz/errors.hpp"
#include "mz/oracle.hpp"

namespace mz {

bool LambdaZero::contains(int p) const {
  return std::binary_search(points.begin(), points.end(), p);
}

LambdaZero compute_lambda0(const FunctionalSystem& sys, const PointSpectrum& sp) {
  LambdaZero l0;
  for (std::size_t p = 0; p < sp.size(); ++p) {
    bool all_zero = true;
    for (int i = 0; i < sys.r() && all_zero; ++i)
      all_zero = functional_at_idempotent(sys, i, static_cast<int>(p)) == 0;
    if (all_zero) l0.points.push_back(static_cast<int>(p));
  }
  return l0;
}

std::optional<Certificate> check_condition_i(const FunctionalSystem& sys, const LambdaZero& l0,
                                             const PointSpectrum& sp, std::size_t subset_cap) {
  std::vector<int> complement;
  for (std::size_t p = 0; p < sp.size(); ++p)
    if (!l0.contains(static_cast<int>(p))) complement.push_back(static_cast<int>(p));
  if (complement.empty()) return std::nullopt;

  for (const std::vector<int>& rel :
       enumerate_subsets(static_cast<int>(complement.size()), subset_cap)) {
    std::vector<int> subset;
    subset.reserve(rel.size());
    for (int k : rel) subset.push_back(complement[static_cast<std::size_t>(k)]);
    bool witnessed = false;
    for (int i = 0; i < sys.r() && !witnessed; ++i) {
      Scalar sum(0);
      for (int p : subset) sum += functional_at_idempotent(sys, i, p);
      witnessed = sum != 0;
    }
    if (!witnessed) {
      Certificate cert;
      cert.kind = CertificateKind::FailConditionI;
      cert.subset = subset;
      return cert;
    }
  }
  return std::nullopt;
}

std::optional<Certificate> check_condition_ii(const FunctionalSystem& sys, const LambdaZero& l0,
                                              const IdempotentFamily& fam,
                                              const QuotientData& q) {
  for (int p : l0.points) {
    const Polynomial& g = fam.g[static_cast<std::size_t>(p)];
    for (const Monomial& m : q.staircase) {
      Polynomial mg = Polynomial::term(m, Scalar(1)) * g;
      for (int i = 0; i < sys.r(); ++i) {
        Scalar v = evaluate_functional(sys, i, mg);
        if (v != 0) {
          Certificate cert;
          cert.kind = CertificateKind::FailConditionII;
          cert.point = p;
          cert.monomial = m;
          cert.functional = i;
          cert.value = v;
          return cert;
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<Certificate> check_condition_ii_all_subsets(const FunctionalSystem& sys,
                                                          const LambdaZero& l0,
                                                          const IdempotentFamily& fam,
                                                          const QuotientData& q,
                                                          std::size_t subset_cap) {
  for (const std::vector<int>& subset :
       enumerate_subsets(static_cast<int>(fam.g.size()), subset_cap)) {
    Polynomial s(q.gb.nvars);
    std::vector<int> inter;
    for (int p : subset) {
      if (!l0.contains(p)) continue;
      inter.push_back(p);
      s += fam.g[static_cast<std::size_t>(p)];
    }
    if (inter.empty()) continue;
    for (const Monomial& m : q.staircase) {
      Polynomial ms = Polynomial::term(m, Scalar(1)) * s;
      for (int i = 0; i < sys.r(); ++i) {
        Scalar v = evaluate_functional(sys, i, ms);
        if (v != 0) {
          Certificate cert;
          cert.kind = CertificateKind::FailConditionII;
          cert.subset = subset;
          cert.monomial = m;
          cert.functional = i;
          cert.value = v;
          return cert;
        }
      }
    }
  }
  return std::nullopt;
}

namespace {

void validate_eliminants(const std::vector<Polynomial>& eliminants) {
  if (eliminants.empty()) throw std::invalid_argument("decide: no eliminants");
  int n = eliminants[0].nvars();
  if (static_cast<int>(eliminants.size()) != n)
    throw std::invalid_argument("decide: expected one eliminant per variable");
  for (int i = 0; i < n; ++i) {
    const Polynomial& f = eliminants[static_cast<std::size_t>(i)];
    if (!f.univariate_in(i))
      throw std::invalid_argument("decide: eliminant " + std::to_string(i + 1) +
                                  " is not univariate in its variable");
    if (f.degree_in(i) < 1)
      throw std::invalid_argument("decide: eliminant " + std::to_string(i + 1) +
                                  " must have degree >= 1");
    Monomial lead(static_cast<std::size_t>(n), 0);
    lead[i] = f.degree_in(i);
    if (f.coeff(lead) != 1)
      throw std::invalid_argument("decide: eliminant " + std::to_string(i + 1) + " is not monic");
  }
}

DecideResult mz_trivial_ring_verdict(GroebnerBasis gb) {
  // I = k[x]: A = 0, no spectrum, nothing to check; the whole ring is MZ
  DecideResult res;
  res.verdict.is_mz = true;
  res.verdict.certificate.kind = CertificateKind::MzAudit;
  res.verdict.gb_size = gb.gens.size();
  res.verdict.spectrum.shift.assign(static_cast<std::size_t>(gb.nvars), Scalar(0));
  res.input_gb = std::move(gb);
  return res;
}

}  // namespace

DecideResult decide(const SubspaceSpec& spec, const DecideOptions& options) {
  validate_eliminants(spec.eliminants);
  const int n = spec.eliminants[0].nvars();

  GroebnerBasis gbJ = buchberger(spec.eliminants);
  QuotientData q0 = make_quotient(gbJ);
  if (q0.dimension == 0) return mz_trivial_ring_verdict(std::move(gbJ));

  std::vector<RootList> rootlists;
  rootlists.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    rootlists.push_back(rational_roots(spec.eliminants[static_cast<std::size_t>(i)], i));

  std::vector<Scalar> shift;
  if (options.shift_override) {
    shift = *options.shift_override;
    if (static_cast<int>(shift.size()) != n)
      throw std::invalid_argument("decide: shift override length mismatch");
    for (int i = 0; i < n; ++i)
      for (const auto& [root, mult] : rootlists[static_cast<std::size_t>(i)].roots)
        if (root + shift[static_cast<std::size_t>(i)] == 0)
          throw std::invalid_argument("decide: shift override leaves a zero root in x" +
                                      std::to_string(i + 1));
  } else {
    shift = choose_shift(rootlists);
  }

  std::vector<RootList> shifted;
  shifted.reserve(rootlists.size());
  for (int i = 0; i < n; ++i)
    shifted.push_back(
        shift_roots(rootlists[static_cast<std::size_t>(i)], shift[static_cast<std::size_t>(i)]));

  std::vector<Polynomial> shifted_eliminants;
  shifted_eliminants.reserve(spec.eliminants.size());
  for (const Polynomial& f : spec.eliminants)
    shifted_eliminants.push_back(apply_shift(f, shift, ShiftDirection::Forward));
  std::vector<Polynomial> transported;
  transported.reserve(spec.vectors.size());
  for (const Polynomial& v : spec.vectors)
    transported.push_back(apply_shift(v, shift, ShiftDirection::Forward));

  DecideResult res;
  res.input_gb = gbJ;
  res.quotient = make_quotient(buchberger(shifted_eliminants));
  PointSpectrum spectrum = build_point_spectrum(std::move(shifted), shift);
  res.family = build_g_lambda(spectrum, res.quotient);
  ReducedSubspace vbasis = reduce_subspace(transported, res.quotient);
  QMatrix M = elementary_matrix(spectrum, res.quotient);
  res.system = annihilator_functionals(std::move(vbasis), M, res.quotient, spectrum);

  Verdict& v = res.verdict;
  v.dimension = res.quotient.dimension;
  v.r = res.system.r();
  v.subspace_dim = static_cast<int>(res.system.vbasis.coords.size());
  v.dropped_vectors = res.system.vbasis.dropped;
  v.gb_size = gbJ.gens.size();
  v.eliminants = spec.eliminants;
  v.shifted_eliminants = std::move(shifted_eliminants);
  v.lambda0 = compute_lambda0(res.system, spectrum);
  v.spectrum = std::move(spectrum);

  if (auto cert = check_condition_i(res.system, v.lambda0, v.spectrum, options.subset_cap)) {
    v.is_mz = false;
    v.certificate = std::move(*cert);
  } else if (auto cert2 = check_condition_ii(res.system, v.lambda0, res.family, res.quotient)) {
    v.is_mz = false;
    v.certificate = std::move(*cert2);
  } else {
    v.is_mz = true;
    v.certificate.kind = CertificateKind::MzAudit;
  }
  assert(reverify_certificate(res));
  return res;
}

DecideResult decide_generators(const std::vector<Polynomial>& gens,
                               const std::vector<Polynomial>& vectors,
                               const DecideOptions& options) {
  GroebnerBasis gb = buchberger(gens);
  QuotientData q = make_quotient(gb);
  if (q.dimension == 0) return mz_trivial_ring_verdict(std::move(gb));

  const int n = gb.nvars;
  std::vector<Polynomial> eliminants;
  eliminants.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) eliminants.push_back(univariate_eliminant(q, i));

  std::vector<Polynomial> extra = represent_over_eliminants(gens, eliminants);
  SubspaceSpec spec;
  spec.eliminants = std::move(eliminants);
  spec.vectors = vectors;
  spec.vectors.insert(spec.vectors.end(), extra.begin(), extra.end());

  DecideResult res = decide(spec, options);
  res.input_gb = std::move(gb);
  res.verdict.gb_size = res.input_gb.gens.size();
  res.extra_vectors = std::move(extra);
  return res;
}

bool reverify_certificate(const DecideResult& res) {
  const Verdict& v = res.verdict;
  switch (v.certificate.kind) {
    case CertificateKind::MzAudit:
      return v.is_mz;
    case CertificateKind::FailConditionI: {
      if (v.is_mz || v.certificate.subset.empty()) return false;
      for (int p : v.certificate.subset)
        if (v.lambda0.contains(p)) return false;
      for (int i = 0; i < res.system.r(); ++i) {
        Scalar sum(0);
        for (int p : v.certificate.subset) sum += functional_at_idempotent(res.system, i, p);
        if (sum != 0) return false;
      }
      return true;
    }
    case CertificateKind::FailConditionII: {
      if (v.is_mz || v.certificate.value == 0) return false;
      if (!v.lambda0.contains(v.certificate.point)) return false;
      Polynomial mg = Polynomial::term(v.certificate.monomial, Scalar(1)) *
                      res.family.g[static_cast<std::size_t>(v.certificate.point)];
      return evaluate_functional(res.system, v.certificate.functional, mg) == v.certificate.value;
    }
  }
  return false;
}

}  // namespace mz
