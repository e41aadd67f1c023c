#include "mz/idempotents.hpp"

#include <cassert>

#include "mz/univariate.hpp"

namespace mz {

std::vector<Polynomial> univariate_crt_factors(const RootList& rl, int nvars) {
  uni::UPoly f = {Scalar(1)};
  for (const auto& [root, mult] : rl.roots) f = uni::mul(f, uni::from_root(root, mult));

  std::vector<Polynomial> out;
  out.reserve(rl.roots.size());
  for (const auto& [root, mult] : rl.roots) {
    uni::UPoly local = uni::from_root(root, mult);
    uni::UPoly cofactor = uni::divmod(f, local).first;
    uni::Xgcd bezout = uni::xgcd(local, cofactor);
    assert(uni::deg(bezout.g) == 0);
    uni::UPoly h = uni::divmod(uni::mul(bezout.b, cofactor), f).second;
    if (rl.roots.size() == 1) h = {Scalar(1)};
    out.push_back(uni::to_poly(h, nvars, rl.var));
  }
  return out;
}

IdempotentFamily build_g_lambda(const PointSpectrum& sp, const QuotientData& q) {
  std::vector<std::vector<Polynomial>> factors;
  factors.reserve(sp.per_var.size());
  for (const RootList& rl : sp.per_var)
    factors.push_back(univariate_crt_factors(rl, q.gb.nvars));

  IdempotentFamily fam;
  fam.g.reserve(sp.size());
  for (const std::vector<int>& tuple : sp.points) {
    Polynomial g = Polynomial::constant(q.gb.nvars, Scalar(1));
    for (std::size_t i = 0; i < tuple.size(); ++i)
      g = g * factors[i][static_cast<std::size_t>(tuple[i])];
    fam.g.push_back(normal_form(g, q.gb));
  }
  return fam;
}

namespace {

// i_mu in [(x-mu)]^{m(mu)} with i_lambda + i_mu = 1, built in the first
// coordinate where the points differ
Polynomial pairwise_i_mu(const PointSpectrum& sp, std::size_t lambda, std::size_t mu) {
  int nvars = static_cast<int>(sp.per_var.size());
  for (std::size_t c = 0; c < sp.per_var.size(); ++c) {
    int a = sp.points[lambda][c];
    int b = sp.points[mu][c];
    if (a == b) continue;
    const auto& [la, ma] = sp.per_var[c].roots[static_cast<std::size_t>(a)];
    const auto& [lb, mb] = sp.per_var[c].roots[static_cast<std::size_t>(b)];
    uni::UPoly qa = uni::from_root(la, ma);
    uni::UPoly qb = uni::from_root(lb, mb);
    uni::Xgcd bez = uni::xgcd(qa, qb);
    assert(uni::deg(bez.g) == 0);
    return uni::to_poly(uni::mul(bez.b, qb), nvars, static_cast<int>(c));
  }
  assert(false && "distinct spectrum points must differ in some coordinate");
  return Polynomial(nvars);
}

}  // namespace

IdempotentFamily build_g_lambda_pairwise(const PointSpectrum& sp, const QuotientData& q) {
  IdempotentFamily fam;
  fam.g.reserve(sp.size());
  for (std::size_t lambda = 0; lambda < sp.size(); ++lambda) {
    Polynomial g = Polynomial::constant(q.gb.nvars, Scalar(1));
    for (std::size_t mu = 0; mu < sp.size(); ++mu) {
      if (mu == lambda) continue;
      g = normal_form(g * pairwise_i_mu(sp, lambda, mu), q.gb);
    }
    fam.g.push_back(normal_form(g, q.gb));
  }
  return fam;
}

namespace {

GroebnerBasis local_basis(const PointSpectrum& sp, std::size_t p, int nvars) {
  std::vector<Polynomial> gens;
  std::vector<Scalar> coords = sp.point(p);
  std::vector<int> mult = sp.multiplicity(p);
  for (int i = 0; i < nvars; ++i)
    gens.push_back(uni::to_poly(
        uni::from_root(coords[static_cast<std::size_t>(i)], mult[static_cast<std::size_t>(i)]),
        nvars, i));
  return buchberger(gens);
}

}  // namespace

FamilyReport verify_family(const IdempotentFamily& fam, const PointSpectrum& sp,
                           const QuotientData& q) {
  if (fam.g.size() != sp.size()) return {false, "family size does not match the spectrum"};
  const Polynomial one = Polynomial::constant(q.gb.nvars, Scalar(1));

  for (std::size_t a = 0; a < fam.g.size(); ++a) {
    if (normal_form(fam.g[a], q.gb).is_zero())
      return {false, "non-zero idempotent violated at point " + std::to_string(a)};
    if (!normal_form(fam.g[a] * fam.g[a] - fam.g[a], q.gb).is_zero())
      return {false, "idempotency violated at point " + std::to_string(a)};
  }
  for (std::size_t a = 0; a < fam.g.size(); ++a)
    for (std::size_t b = a + 1; b < fam.g.size(); ++b)
      if (!normal_form(fam.g[a] * fam.g[b], q.gb).is_zero())
        return {false, "orthogonality violated at points " + std::to_string(a) + "," +
                           std::to_string(b)};

  Polynomial sum(q.gb.nvars);
  for (const Polynomial& g : fam.g) sum += g;
  if (!normal_form(sum - one, q.gb).is_zero()) return {false, "idempotent sum is not 1"};

  // local congruences: g_a = 1 mod [(x-a)]^{m(a)}, g_a = 0 mod others
  for (std::size_t a = 0; a < fam.g.size(); ++a) {
    GroebnerBasis loc = local_basis(sp, a, q.gb.nvars);
    if (!normal_form(fam.g[a] - one, loc).is_zero())
      return {false, "g is not 1 modulo its local ideal at point " + std::to_string(a)};
    for (std::size_t b = 0; b < fam.g.size(); ++b) {
      if (a == b) continue;
      if (!normal_form(fam.g[b], loc).is_zero())
        return {false, "g at point " + std::to_string(b) +
                           " does not vanish modulo the local ideal at point " + std::to_string(a)};
    }
  }
  return {};
}

}  // namespace mz
