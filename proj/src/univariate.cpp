#include "mz/univariate.hpp"

#include <cassert>
#include <stdexcept>

namespace mz::uni {

int deg(const UPoly& f) { return static_cast<int>(f.size()) - 1; }

void normalize(UPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

bool is_zero(const UPoly& f) { return f.empty(); }

UPoly add(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), Scalar(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  normalize(r);
  return r;
}

UPoly sub(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), Scalar(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  normalize(r);
  return r;
}

UPoly mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, Scalar(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  normalize(r);
  return r;
}

UPoly scale(UPoly a, const Scalar& c) {
  if (c == 0) return {};
  for (auto& x : a) x *= c;
  return a;
}

UPoly monic(UPoly f) {
  if (f.empty()) return f;
  Scalar lead = f.back();
  for (auto& c : f) c /= lead;
  return f;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  assert(!b.empty());
  UPoly r = a;
  if (deg(a) < deg(b)) return {{}, r};
  UPoly q(a.size() - b.size() + 1, Scalar(0));
  while (deg(r) >= deg(b)) {
    Scalar c = r.back() / b.back();
    int shift = deg(r) - deg(b);
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) r[i + shift] -= c * b[i];
    normalize(r);
    if (r.empty()) break;
  }
  normalize(q);
  return {q, r};
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.empty()) {
    UPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(std::move(a));
}

Xgcd xgcd(const UPoly& f, const UPoly& h) {
  // iterative extended Euclid, g normalized monic at the end
  UPoly r0 = f, r1 = h;
  UPoly a0 = {Scalar(1)}, a1 = {};
  UPoly b0 = {}, b1 = {Scalar(1)};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    UPoly a2 = sub(a0, mul(q, a1));
    UPoly b2 = sub(b0, mul(q, b1));
    r0 = std::move(r1);
    r1 = std::move(r);
    a0 = std::move(a1);
    a1 = std::move(a2);
    b0 = std::move(b1);
    b1 = std::move(b2);
  }
  if (!r0.empty()) {
    Scalar lead = r0.back();
    r0 = monic(std::move(r0));
    a0 = scale(std::move(a0), Scalar(1) / lead);
    b0 = scale(std::move(b0), Scalar(1) / lead);
  }
  return {r0, a0, b0};
}

UPoly derivative(const UPoly& f) {
  if (f.size() <= 1) return {};
  UPoly r(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) r[i - 1] = f[i] * Scalar(static_cast<int>(i));
  normalize(r);
  return r;
}

Scalar eval(const UPoly& f, const Scalar& x) {
  Scalar acc(0);
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UPoly pow(const UPoly& f, int exp) {
  if (exp < 0) throw std::invalid_argument("uni::pow: negative exponent");
  UPoly r = {Scalar(1)};
  for (int k = 0; k < exp; ++k) r = mul(r, f);
  return r;
}

UPoly from_root(const Scalar& root, int mult) { return pow({-root, Scalar(1)}, mult); }

std::vector<std::pair<UPoly, int>> yun_squarefree(const UPoly& f) {
  assert(!f.empty() && f.back() == 1);
  std::vector<std::pair<UPoly, int>> out;
  if (deg(f) == 0) return out;
  UPoly fp = derivative(f);
  UPoly a = gcd(f, fp);
  UPoly b = divmod(f, a).first;
  UPoly c = divmod(fp, a).first;
  UPoly d = sub(c, derivative(b));
  int i = 1;
  while (deg(b) > 0) {
    UPoly h = gcd(b, d);
    if (deg(h) > 0) out.emplace_back(h, i);
    b = divmod(b, h).first;
    c = divmod(d, h).first;
    d = sub(c, derivative(b));
    ++i;
  }
  return out;
}

UPoly to_dense(const Polynomial& f, int var) {
  if (!f.univariate_in(var))
    throw std::invalid_argument("to_dense: polynomial involves a foreign variable");
  UPoly r(static_cast<std::size_t>(std::max(0, f.degree_in(var)) + 1), Scalar(0));
  if (f.is_zero()) return {};
  for (const auto& [m, c] : f.terms()) r[m[var]] = c;
  normalize(r);
  return r;
}

Polynomial to_poly(const UPoly& f, int nvars, int var) {
  assert(var >= 0 && var < nvars);
  Polynomial p(nvars);
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (f[k] == 0) continue;
    Monomial m(nvars, 0);
    m[var] = static_cast<int>(k);
    p.add_term(m, f[k]);
  }
  return p;
}

}  // namespace mz::uni
