#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "mz/monomial.hpp"
#include "mz/scalar.hpp"

namespace mz {

// Exact multivariate polynomial over the rationals. Canonical form: no zero
// coefficient is ever stored, and the term map iterates in graded-lex order,
// so equality of term maps is equality of polynomials.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Scalar, GrlexLess>;

  explicit Polynomial(int nvars = 0) : nvars_(nvars) {}

  static Polynomial constant(int nvars, const Scalar& c);
  static Polynomial variable(int nvars, int var);
  static Polynomial term(Monomial m, const Scalar& c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  const TermMap& terms() const { return terms_; }

  Scalar coeff(const Monomial& m) const;
  Scalar constant_coeff() const { return coeff(Monomial(nvars_, 0)); }
  void add_term(const Monomial& m, const Scalar& c);

  int degree_in(int var) const;  // -1 for the zero polynomial
  int total_deg() const;         // -1 for the zero polynomial
  // exponents of var occurring in this polynomial, or -1 when a foreign
  // variable occurs; used to recognize univariate inputs
  bool univariate_in(int var) const;

  const Monomial& leading_monomial(MonomialOrder order) const;  // nonzero only
  const Scalar& leading_coeff(MonomialOrder order) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Scalar& c);
  Polynomial operator-() const;

  Scalar evaluate(std::span<const Scalar> point) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  int nvars_;
  TermMap terms_;
};

Polynomial operator+(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(Polynomial a, const Scalar& c);
Polynomial operator*(const Scalar& c, Polynomial a);

// x_var * d/dx_var
Polynomial apply_D(const Polynomial& f, int var);

// Substitutes D_j for x_j in P and applies the operator to f. The D_j
// commute, so the composition order inside each monomial is irrelevant.
Polynomial apply_P_of_D(const Polynomial& P, const Polynomial& f);

// f with x_var replaced by repl (Horner in x_var)
Polynomial substitute(const Polynomial& f, int var, const Polynomial& repl);

Polynomial poly_pow(const Polynomial& f, int exp);

std::vector<std::string> default_var_names(int n);  // x1, x2, ...
std::string to_string(const Polynomial& f, std::span<const std::string> names);
std::string to_string(const Polynomial& f);
std::string to_string(const Monomial& m, std::span<const std::string> names);

}  // namespace mz
