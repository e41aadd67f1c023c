#include "mz/polynomial.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace mz {

Polynomial Polynomial::constant(int nvars, const Scalar& c) {
  Polynomial p(nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(int nvars, int var) {
  assert(var >= 0 && var < nvars);
  Monomial m(nvars, 0);
  m[var] = 1;
  return term(std::move(m), Scalar(1));
}

Polynomial Polynomial::term(Monomial m, const Scalar& c) {
  Polynomial p(static_cast<int>(m.size()));
  p.add_term(m, c);
  return p;
}

bool Polynomial::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && total_degree(terms_.begin()->first) == 0;
}

Scalar Polynomial::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Scalar& c) {
  assert(static_cast<int>(m.size()) == nvars_);
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int Polynomial::degree_in(int var) const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
  return d;
}

int Polynomial::total_deg() const {
  if (terms_.empty()) return -1;
  // grlex map: the last term has maximal total degree
  return total_degree(terms_.rbegin()->first);
}

bool Polynomial::univariate_in(int var) const {
  for (const auto& [m, c] : terms_)
    for (std::size_t i = 0; i < m.size(); ++i)
      if (static_cast<int>(i) != var && m[i] != 0) return false;
  return true;
}

const Monomial& Polynomial::leading_monomial(MonomialOrder order) const {
  assert(!terms_.empty());
  const Monomial* best = &terms_.begin()->first;
  for (const auto& [m, c] : terms_)
    if (order_less(*best, m, order)) best = &m;
  return *best;
}

const Scalar& Polynomial::leading_coeff(MonomialOrder order) const {
  return terms_.at(leading_monomial(order));
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  assert(nvars_ == rhs.nvars_);
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  assert(nvars_ == rhs.nvars_);
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [m, v] : r.terms_) v = -v;
  return r;
}

Scalar Polynomial::evaluate(std::span<const Scalar> point) const {
  assert(static_cast<int>(point.size()) == nvars_);
  Scalar acc(0);
  for (const auto& [m, c] : terms_) {
    Scalar t = c;
    for (int i = 0; i < nvars_; ++i)
      if (m[i] != 0) t *= scalar_pow(point[i], m[i]);
    acc += t;
  }
  return acc;
}

Polynomial operator+(Polynomial a, const Polynomial& b) {
  a += b;
  return a;
}

Polynomial operator-(Polynomial a, const Polynomial& b) {
  a -= b;
  return a;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  assert(a.nvars() == b.nvars());
  Polynomial r(a.nvars());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) r.add_term(mono_mul(ma, mb), ca * cb);
  return r;
}

Polynomial operator*(Polynomial a, const Scalar& c) {
  a *= c;
  return a;
}

Polynomial operator*(const Scalar& c, Polynomial a) {
  a *= c;
  return a;
}

Polynomial apply_D(const Polynomial& f, int var) {
  assert(var >= 0 && var < f.nvars());
  Polynomial r(f.nvars());
  for (const auto& [m, c] : f.terms())
    if (m[var] != 0) r.add_term(m, c * m[var]);
  return r;
}

Polynomial apply_P_of_D(const Polynomial& P, const Polynomial& f) {
  assert(P.nvars() == f.nvars());
  Polynomial out(f.nvars());
  for (const auto& [exp, c] : P.terms()) {
    Polynomial g = f;
    for (int var = 0; var < f.nvars(); ++var)
      for (int k = 0; k < exp[var]; ++k) g = apply_D(g, var);
    out += g * c;
  }
  return out;
}

Polynomial substitute(const Polynomial& f, int var, const Polynomial& repl) {
  assert(var >= 0 && var < f.nvars());
  assert(repl.nvars() == f.nvars());
  // collect coefficients of powers of x_var, then Horner
  std::map<int, Polynomial> by_power;
  for (const auto& [m, c] : f.terms()) {
    Monomial rest = m;
    int k = rest[var];
    rest[var] = 0;
    auto [it, inserted] = by_power.emplace(k, Polynomial(f.nvars()));
    it->second.add_term(rest, c);
  }
  Polynomial acc(f.nvars());
  int prev = -1;
  for (auto it = by_power.rbegin(); it != by_power.rend(); ++it) {
    if (prev >= 0)
      for (int k = it->first; k < prev; ++k) acc = acc * repl;
    acc += it->second;
    prev = it->first;
  }
  if (prev > 0)
    for (int k = 0; k < prev; ++k) acc = acc * repl;
  return acc;
}

Polynomial poly_pow(const Polynomial& f, int exp) {
  if (exp < 0) throw std::invalid_argument("poly_pow: negative exponent");
  Polynomial r = Polynomial::constant(f.nvars(), Scalar(1));
  for (int k = 0; k < exp; ++k) r = r * f;
  return r;
}

std::vector<std::string> default_var_names(int n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

std::string to_string(const Monomial& m, std::span<const std::string> names) {
  assert(m.size() == names.size());
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += names[i];
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  if (out.empty()) out = "1";
  return out;
}

std::string to_string(const Polynomial& f, std::span<const std::string> names) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  // display leading term first
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    Scalar a = c;
    if (first) {
      if (a < 0) {
        out << "-";
        a = -a;
      }
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    bool is_const = total_degree(m) == 0;
    if (a != 1 || is_const) {
      out << scalar_to_string(a);
      if (!is_const) out << "*";
    }
    if (!is_const) out << to_string(m, names);
    first = false;
  }
  return out.str();
}

std::string to_string(const Polynomial& f) {
  auto names = default_var_names(f.nvars());
  return to_string(f, names);
}

}  // namespace mz
