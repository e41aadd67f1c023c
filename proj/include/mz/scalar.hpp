#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace mz {

using Int = boost::multiprecision::cpp_int;

// Exact rational scalar. boost keeps the stored value reduced with a
// positive denominator, which is exactly the canonical form we require.
using Scalar = boost::multiprecision::cpp_rational;

inline Int scalar_num(const Scalar& q) { return boost::multiprecision::numerator(q); }
inline Int scalar_den(const Scalar& q) { return boost::multiprecision::denominator(q); }

// "p" or "p/q"
std::string scalar_to_string(const Scalar& q);

// Accepts "p" or "p/q" with optional leading '-'; throws std::invalid_argument.
Scalar scalar_from_string(std::string_view s);

// exp >= 0, with the convention 0^0 = 1
Scalar scalar_pow(const Scalar& base, int exp);

bool is_integer(const Scalar& q);

}  // namespace mz
