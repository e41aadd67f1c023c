#pragma once

#include <utility>
#include <vector>

#include "mz/polynomial.hpp"
#include "mz/scalar.hpp"

namespace mz::uni {

// Dense univariate polynomial: coeffs[k] multiplies t^k, no trailing zeros.
using UPoly = std::vector<Scalar>;

int deg(const UPoly& f);  // -1 for zero
void normalize(UPoly& f);
bool is_zero(const UPoly& f);

UPoly add(const UPoly& a, const UPoly& b);
UPoly sub(const UPoly& a, const UPoly& b);
UPoly mul(const UPoly& a, const UPoly& b);
UPoly scale(UPoly a, const Scalar& c);
UPoly monic(UPoly f);

// quotient and remainder; b nonzero
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);

UPoly gcd(UPoly a, UPoly b);  // monic, gcd(0,0) = 0

// g monic with a*f + b*h = g
struct Xgcd {
  UPoly g, a, b;
};
Xgcd xgcd(const UPoly& f, const UPoly& h);

UPoly derivative(const UPoly& f);
Scalar eval(const UPoly& f, const Scalar& x);
UPoly pow(const UPoly& f, int exp);
UPoly from_root(const Scalar& root, int mult);  // (t - root)^mult

// Yun's square-free decomposition of a monic f: pairwise-coprime monic
// square-free h_j with f = prod h_j^j; only nontrivial h_j are returned,
// as (h_j, j) with j ascending.
std::vector<std::pair<UPoly, int>> yun_squarefree(const UPoly& f);

// f must involve no variable other than var
UPoly to_dense(const Polynomial& f, int var);
Polynomial to_poly(const UPoly& f, int nvars, int var);

}  // namespace mz::uni
