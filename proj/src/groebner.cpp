#include "mz/groebner.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

#include "mz/errors.hpp"

namespace mz {

namespace {

// one division step: returns the remainder of f on division by gens
Polynomial reduce_by(const Polynomial& f, const std::vector<Polynomial>& gens,
                     MonomialOrder order) {
  Polynomial p = f;
  Polynomial rem(f.nvars());
  while (!p.is_zero()) {
    Monomial lm = p.leading_monomial(order);
    Scalar lc = p.terms().at(lm);
    bool reduced = false;
    for (const Polynomial& g : gens) {
      if (g.is_zero()) continue;
      const Monomial& glm = g.leading_monomial(order);
      if (!divides(glm, lm)) continue;
      Scalar factor = lc / g.terms().at(glm);
      Monomial shift = mono_div(lm, glm);
      p -= Polynomial::term(shift, factor) * g;
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.add_term(lm, lc);
      p.add_term(lm, -lc);
    }
  }
  return rem;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, MonomialOrder order) {
  const Monomial& lf = f.leading_monomial(order);
  const Monomial& lg = g.leading_monomial(order);
  Monomial l = mono_lcm(lf, lg);
  Polynomial a = Polynomial::term(mono_div(l, lf), Scalar(1) / f.terms().at(lf)) * f;
  Polynomial b = Polynomial::term(mono_div(l, lg), Scalar(1) / g.terms().at(lg)) * g;
  return a - b;
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

}  // namespace

GroebnerBasis buchberger(std::vector<Polynomial> gens, MonomialOrder order) {
  std::vector<Polynomial> basis;
  int nvars = 0;
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    nvars = g.nvars();
    basis.push_back(g * (Scalar(1) / g.leading_coeff(order)));
  }
  if (basis.empty()) throw std::invalid_argument("buchberger: no nonzero generators");

  auto make_pair = [&](std::size_t i, std::size_t j) {
    return Pair{i, j,
                mono_lcm(basis[i].leading_monomial(order), basis[j].leading_monomial(order))};
  };

  std::vector<Pair> pending;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) pending.push_back(make_pair(i, j));

  auto is_pending = [&](std::size_t a, std::size_t b) {
    for (const Pair& p : pending)
      if ((p.i == a && p.j == b) || (p.i == b && p.j == a)) return true;
    return false;
  };

  while (!pending.empty()) {
    // normal strategy: smallest lcm in the order, ties by generator index
    std::size_t best = 0;
    for (std::size_t k = 1; k < pending.size(); ++k) {
      int cmp = order_compare(pending[k].lcm, pending[best].lcm, order);
      if (cmp < 0 || (cmp == 0 && (pending[k].i < pending[best].i ||
                                   (pending[k].i == pending[best].i &&
                                    pending[k].j < pending[best].j))))
        best = k;
    }
    Pair p = pending[best];
    pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(best));

    const Monomial& li = basis[p.i].leading_monomial(order);
    const Monomial& lj = basis[p.j].leading_monomial(order);
    if (mono_coprime(li, lj)) continue;  // first Buchberger criterion
    // chain criterion: some k with LT_k | lcm and both (i,k), (j,k) settled
    bool skip = false;
    for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
      if (k == p.i || k == p.j) continue;
      if (divides(basis[k].leading_monomial(order), p.lcm) && !is_pending(p.i, k) &&
          !is_pending(p.j, k))
        skip = true;
    }
    if (skip) continue;

    Polynomial r = reduce_by(s_polynomial(basis[p.i], basis[p.j], order), basis, order);
    if (r.is_zero()) continue;
    r *= Scalar(1) / r.leading_coeff(order);
    basis.push_back(r);
    for (std::size_t i = 0; i + 1 < basis.size(); ++i)
      pending.push_back(make_pair(i, basis.size() - 1));
  }

  // minimalize: drop generators whose leading term another one divides
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& li = basis[i].leading_monomial(order);
      const Monomial& lj = basis[j].leading_monomial(order);
      if (divides(lj, li) && (li != lj || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }

  // tail-reduce each generator against the others
  std::vector<Polynomial> reduced = minimal;
  for (std::size_t i = 0; i < reduced.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < reduced.size(); ++j)
      if (j != i) others.push_back(reduced[j]);
    reduced[i] = reduce_by(reduced[i], others, order);
    reduced[i] *= Scalar(1) / reduced[i].leading_coeff(order);
  }

  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order_less(a.leading_monomial(order), b.leading_monomial(order), order);
  });
  return GroebnerBasis{std::move(reduced), order, nvars};
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  return reduce_by(f, gb.gens, gb.order);
}

namespace {

// minimal pure-power degree of each variable among the leading terms;
// -1 when absent (infinite staircase in that direction)
std::vector<int> pure_power_bounds(const GroebnerBasis& gb) {
  std::vector<int> bound(static_cast<std::size_t>(gb.nvars), -1);
  for (const Polynomial& g : gb.gens) {
    const Monomial& lm = g.leading_monomial(gb.order);
    int var = -1;
    bool pure = true;
    for (int i = 0; i < gb.nvars; ++i) {
      if (lm[i] == 0) continue;
      if (var >= 0) {
        pure = false;
        break;
      }
      var = i;
    }
    if (!pure) continue;
    if (var < 0) {
      // a constant generator: the ideal is the whole ring
      std::fill(bound.begin(), bound.end(), 0);
      return bound;
    }
    if (bound[var] < 0 || lm[var] < bound[var]) bound[var] = lm[var];
  }
  return bound;
}

void enumerate_box(const std::vector<int>& bound, std::size_t var, Monomial& m,
                   std::vector<Monomial>& out) {
  if (var == bound.size()) {
    out.push_back(m);
    return;
  }
  for (int e = 0; e < bound[var]; ++e) {
    m[var] = e;
    enumerate_box(bound, var + 1, m, out);
  }
  m[var] = 0;
}

}  // namespace

std::optional<long> quotient_dimension(const GroebnerBasis& gb) {
  std::vector<int> bound = pure_power_bounds(gb);
  for (int b : bound)
    if (b < 0) return std::nullopt;
  std::vector<Monomial> box;
  Monomial m(static_cast<std::size_t>(gb.nvars), 0);
  enumerate_box(bound, 0, m, box);
  long count = 0;
  for (const Monomial& cand : box) {
    bool member = true;
    for (const Polynomial& g : gb.gens)
      if (divides(g.leading_monomial(gb.order), cand)) {
        member = false;
        break;
      }
    if (member) ++count;
  }
  return count;
}

long QuotientData::index_of(const Monomial& m) const {
  auto it = index.find(m);
  return it == index.end() ? -1 : it->second;
}

QuotientData make_quotient(GroebnerBasis gb) {
  std::vector<int> bound = pure_power_bounds(gb);
  for (int i = 0; i < gb.nvars; ++i)
    if (bound[static_cast<std::size_t>(i)] < 0) throw InfiniteCodimensionError(i);

  QuotientData q;
  q.gb = std::move(gb);
  std::vector<Monomial> box;
  Monomial m(static_cast<std::size_t>(q.gb.nvars), 0);
  enumerate_box(bound, 0, m, box);
  for (const Monomial& cand : box) {
    bool member = true;
    for (const Polynomial& g : q.gb.gens)
      if (divides(g.leading_monomial(q.gb.order), cand)) {
        member = false;
        break;
      }
    if (member) q.staircase.push_back(cand);
  }
  std::sort(q.staircase.begin(), q.staircase.end(), GrlexLess{});
  q.dimension = static_cast<long>(q.staircase.size());
  for (long i = 0; i < q.dimension; ++i) q.index.emplace(q.staircase[static_cast<std::size_t>(i)], i);

  // box quotient iff every leading term is a pure power
  bool box_basis = true;
  for (const Polynomial& g : q.gb.gens) {
    const Monomial& lm = g.leading_monomial(q.gb.order);
    int nonzero = 0;
    for (int e : lm) nonzero += e > 0 ? 1 : 0;
    if (nonzero > 1) {
      box_basis = false;
      break;
    }
  }
  if (box_basis) q.degrees = bound;
  return q;
}

std::vector<Scalar> staircase_coords(const Polynomial& f, const QuotientData& q) {
  std::vector<Scalar> coords(static_cast<std::size_t>(q.dimension), Scalar(0));
  for (const auto& [m, c] : f.terms()) {
    long idx = q.index_of(m);
    if (idx < 0) throw std::invalid_argument("staircase_coords: term off the staircase");
    coords[static_cast<std::size_t>(idx)] = c;
  }
  return coords;
}

Polynomial from_staircase_coords(std::span<const Scalar> coords, const QuotientData& q) {
  assert(static_cast<long>(coords.size()) == q.dimension);
  Polynomial f(q.gb.nvars);
  for (std::size_t i = 0; i < coords.size(); ++i) f.add_term(q.staircase[i], coords[i]);
  return f;
}

Polynomial univariate_eliminant(const QuotientData& q, int var) {
  const std::size_t d = static_cast<std::size_t>(q.dimension);
  // augmented rows [coords(x^k) | e_k]: a dependence leaves the combination
  // coefficients in the tail, with the entry at position k still 1
  RowEchelon ech(d + d + 2);
  Polynomial power = Polynomial::constant(q.gb.nvars, Scalar(1));
  Polynomial x = Polynomial::variable(q.gb.nvars, var);
  for (std::size_t k = 0; k <= d; ++k) {
    std::vector<Scalar> row(d + d + 2, Scalar(0));
    std::vector<Scalar> coords = staircase_coords(normal_form(power, q.gb), q);
    std::copy(coords.begin(), coords.end(), row.begin());
    row[d + k] = 1;
    std::vector<Scalar> residual = ech.reduce(row);
    bool dependent = true;
    for (std::size_t c = 0; c < d; ++c)
      if (residual[c] != 0) {
        dependent = false;
        break;
      }
    if (dependent) {
      Polynomial f(q.gb.nvars);
      // residual tail is the monic dependence: position k untouched
      assert(residual[d + k] == 1);
      for (std::size_t j = 0; j <= k; ++j) {
        if (residual[d + j] == 0) continue;
        Monomial m(static_cast<std::size_t>(q.gb.nvars), 0);
        m[var] = static_cast<int>(j);
        f.add_term(m, residual[d + j]);
      }
      return f;
    }
    ech.insert(std::move(row));
    power = power * x;
  }
  throw std::logic_error("univariate_eliminant: no dependence up to the quotient dimension");
}

std::vector<Polynomial> represent_over_eliminants(const std::vector<Polynomial>& gens,
                                                  const std::vector<Polynomial>& eliminants) {
  QuotientData q = make_quotient(buchberger(eliminants));
  RowEchelon sift(static_cast<std::size_t>(q.dimension));
  std::vector<Polynomial> out;
  for (const Polynomial& g : gens) {
    for (const Monomial& m : q.staircase) {
      Polynomial nf = normal_form(Polynomial::term(m, Scalar(1)) * g, q.gb);
      if (nf.is_zero()) continue;
      if (sift.insert(staircase_coords(nf, q))) out.push_back(nf);
    }
  }
  return out;
}

}  // namespace mz
