#include "mz/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace mz {

std::string scalar_to_string(const Scalar& q) {
  Int n = scalar_num(q);
  Int d = scalar_den(q);
  if (d == 1) return n.str();
  return n.str() + "/" + d.str();
}

namespace {

Int int_from_string(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) throw std::invalid_argument("bare sign is not an integer");
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw std::invalid_argument("invalid integer literal: " + std::string(s));
  return Int(std::string(s));
}

}  // namespace

Scalar scalar_from_string(std::string_view s) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Scalar(int_from_string(s));
  Int num = int_from_string(s.substr(0, slash));
  Int den = int_from_string(s.substr(slash + 1));
  if (den <= 0) throw std::invalid_argument("denominator must be positive: " + std::string(s));
  return Scalar(num, den);
}

Scalar scalar_pow(const Scalar& base, int exp) {
  if (exp < 0) throw std::invalid_argument("scalar_pow: negative exponent");
  Scalar r(1);
  Scalar b = base;
  while (exp > 0) {
    if (exp & 1) r *= b;
    b *= b;
    exp >>= 1;
  }
  return r;
}

bool is_integer(const Scalar& q) { return scalar_den(q) == 1; }

}  // namespace mz
