#include "mz/spectrum.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

#include "mz/errors.hpp"
#include "mz/univariate.hpp"

namespace mz {

int RootList::degree() const {
  int d = 0;
  for (const auto& [r, m] : roots) d += m;
  return d;
}

std::vector<Scalar> PointSpectrum::point(std::size_t p) const {
  std::vector<Scalar> coords;
  coords.reserve(per_var.size());
  for (std::size_t i = 0; i < per_var.size(); ++i)
    coords.push_back(per_var[i].roots[static_cast<std::size_t>(points[p][i])].first);
  return coords;
}

std::vector<int> PointSpectrum::multiplicity(std::size_t p) const {
  std::vector<int> m;
  m.reserve(per_var.size());
  for (std::size_t i = 0; i < per_var.size(); ++i)
    m.push_back(per_var[i].roots[static_cast<std::size_t>(points[p][i])].second);
  return m;
}

std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& f, int var) {
  uni::UPoly u = uni::to_dense(f, var);
  if (uni::deg(u) < 1 || u.back() != 1)
    throw std::invalid_argument("squarefree_decomposition: expects a monic polynomial of degree >= 1");
  std::vector<std::pair<Polynomial, int>> out;
  for (const auto& [h, mult] : uni::yun_squarefree(u))
    out.emplace_back(uni::to_poly(h, f.nvars(), var), mult);
  return out;
}

namespace {

std::vector<Int> positive_divisors(Int n) {
  if (n < 0) n = -n;
  std::vector<Int> divs;
  for (Int d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      divs.push_back(d);
      if (d * d != n) divs.push_back(n / d);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

// rational roots of a square-free monic polynomial, each simple
std::vector<Scalar> squarefree_rational_roots(const uni::UPoly& h) {
  std::set<Scalar> found;
  uni::UPoly work = h;
  if (!work.empty() && work.front() == 0) {
    found.insert(Scalar(0));
    work.erase(work.begin());  // square-free: t divides at most once
  }
  if (uni::deg(work) >= 1) {
    // clear denominators, then test divisor-pair candidates exactly
    Int den_lcm = 1;
    for (const Scalar& c : work) {
      Int d = scalar_den(c);
      den_lcm = den_lcm / boost::multiprecision::gcd(den_lcm, d) * d;
    }
    std::vector<Int> ints;
    ints.reserve(work.size());
    for (const Scalar& c : work) ints.push_back(scalar_num(c * Scalar(den_lcm)));
    std::vector<Int> ps = positive_divisors(ints.front());
    std::vector<Int> qs = positive_divisors(ints.back());
    for (const Int& p : ps) {
      for (const Int& q : qs) {
        for (int sign : {1, -1}) {
          Scalar cand(sign * p, q);
          if (uni::eval(work, cand) == 0) found.insert(cand);
        }
      }
    }
  }
  return {found.begin(), found.end()};
}

}  // namespace

RootList rational_roots(const Polynomial& f, int var) {
  uni::UPoly u = uni::to_dense(f, var);
  if (uni::deg(u) < 1 || u.back() != 1)
    throw std::invalid_argument("rational_roots: expects a monic polynomial of degree >= 1");

  RootList rl;
  rl.var = var;
  for (const auto& [h, mult] : uni::yun_squarefree(u)) {
    std::vector<Scalar> roots = squarefree_rational_roots(h);
    if (static_cast<int>(roots.size()) != uni::deg(h)) {
      // the rational-root-free cofactor witnesses the failure
      uni::UPoly cof = h;
      for (const Scalar& r : roots) cof = uni::divmod(cof, uni::from_root(r, 1)).first;
      throw NonSplittingError(to_string(uni::to_poly(cof, f.nvars(), var)), var);
    }
    for (const Scalar& r : roots) rl.roots.emplace_back(r, mult);
  }
  std::sort(rl.roots.begin(), rl.roots.end());

  // reconstruction check: the product of linear factors must equal f exactly
  uni::UPoly rec = {Scalar(1)};
  for (const auto& [r, m] : rl.roots) rec = uni::mul(rec, uni::from_root(r, m));
  if (rec != u) throw std::logic_error("rational_roots: reconstruction mismatch");
  return rl;
}

std::vector<Scalar> choose_shift(const std::vector<RootList>& rootlists) {
  std::vector<Scalar> shift;
  shift.reserve(rootlists.size());
  for (const RootList& rl : rootlists) {
    Scalar c(0);
    auto hits_zero = [&](const Scalar& cand) {
      for (const auto& [r, m] : rl.roots)
        if (r + cand == 0) return true;
      return false;
    };
    while (hits_zero(c)) c += 1;
    shift.push_back(c);
  }
  return shift;
}

Polynomial apply_shift(const Polynomial& f, std::span<const Scalar> c, ShiftDirection dir) {
  assert(static_cast<int>(c.size()) == f.nvars());
  Polynomial out = f;
  for (int i = 0; i < f.nvars(); ++i) {
    if (c[static_cast<std::size_t>(i)] == 0) continue;
    Scalar delta = dir == ShiftDirection::Forward ? -c[static_cast<std::size_t>(i)]
                                                  : c[static_cast<std::size_t>(i)];
    Polynomial repl = Polynomial::variable(f.nvars(), i) + Polynomial::constant(f.nvars(), delta);
    out = substitute(out, i, repl);
  }
  return out;
}

RootList shift_roots(const RootList& rl, const Scalar& c) {
  RootList out;
  out.var = rl.var;
  out.roots.reserve(rl.roots.size());
  for (const auto& [r, m] : rl.roots) out.roots.emplace_back(r + c, m);
  std::sort(out.roots.begin(), out.roots.end());
  return out;
}

PointSpectrum build_point_spectrum(std::vector<RootList> rootlists, std::vector<Scalar> shift) {
  for (const RootList& rl : rootlists)
    for (const auto& [r, m] : rl.roots)
      if (r == 0) throw std::invalid_argument("build_point_spectrum: zero root after shift");

  PointSpectrum sp;
  sp.per_var = std::move(rootlists);
  sp.shift = std::move(shift);
  std::vector<int> tuple(sp.per_var.size(), 0);
  std::size_t total = 1;
  for (const RootList& rl : sp.per_var) total *= rl.roots.size();
  sp.points.reserve(total);
  for (std::size_t count = 0; count < total; ++count) {
    sp.points.push_back(tuple);
    for (std::size_t i = tuple.size(); i-- > 0;) {
      if (++tuple[i] < static_cast<int>(sp.per_var[i].roots.size())) break;
      tuple[i] = 0;
    }
  }
  return sp;
}

}  // namespace mz
