#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "mz/matrix.hpp"
#include "mz/polynomial.hpp"

namespace mz {

// Reduced Groebner basis: generators monic, no leading term divides any term
// of another generator, sorted ascending by leading monomial.
struct GroebnerBasis {
  std::vector<Polynomial> gens;
  MonomialOrder order = MonomialOrder::Grevlex;
  int nvars = 0;
};

GroebnerBasis buchberger(std::vector<Polynomial> gens,
                         MonomialOrder order = MonomialOrder::Grevlex);

// unique remainder supported on the staircase
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

// number of staircase monomials; nullopt = infinite codimension
std::optional<long> quotient_dimension(const GroebnerBasis& gb);

// The quotient algebra A = k[x]/I as linear-algebra data.
struct QuotientData {
  GroebnerBasis gb;
  std::vector<Monomial> staircase;  // grlex ascending
  long dimension = 0;
  // per-variable degrees (d_1..d_n) when the basis is {f_1(x_1)..f_n(x_n)}
  // and the staircase is the full box; empty otherwise
  std::vector<int> degrees;
  std::map<Monomial, long, GrlexLess> index;

  bool is_box() const { return !degrees.empty(); }
  long index_of(const Monomial& m) const;  // -1 when off the staircase
};

// throws InfiniteCodimensionError
QuotientData make_quotient(GroebnerBasis gb);

// coordinates of a staircase-supported polynomial (e.g. a normal form)
std::vector<Scalar> staircase_coords(const Polynomial& f, const QuotientData& q);
Polynomial from_staircase_coords(std::span<const Scalar> coords, const QuotientData& q);

// The monic univariate polynomial of minimal degree in x_var contained in
// the ideal, found by exact linear dependence among normal forms of powers.
Polynomial univariate_eliminant(const QuotientData& q, int var);

// A linearly independent spanning set of ideal(gens) modulo J = (f_1..f_n),
// obtained from normal forms of x^m * q over the staircase box of J.
std::vector<Polynomial> represent_over_eliminants(const std::vector<Polynomial>& gens,
                                                  const std::vector<Polynomial>& eliminants);

}  // namespace mz
