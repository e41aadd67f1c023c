#pragma once

#include <vector>

namespace mz {

// Exponent vector; its length is the ambient variable count n.
using Monomial = std::vector<int>;

int total_degree(const Monomial& m);
bool divides(const Monomial& a, const Monomial& b);  // a | b componentwise
Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_div(const Monomial& a, const Monomial& b);  // requires b | a
Monomial mono_lcm(const Monomial& a, const Monomial& b);
bool mono_coprime(const Monomial& a, const Monomial& b);

// The paper's partial order: a < b iff a_i < b_i for all i.
bool strictly_below(const Monomial& a, const Monomial& b);

// Graded, then lexicographic. Fixed storage and display order of term maps,
// independent of the Groebner order in use.
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

enum class MonomialOrder { Grevlex, Lex };

// three-way compare: negative iff a < b in the given order
int order_compare(const Monomial& a, const Monomial& b, MonomialOrder order);
inline bool order_less(const Monomial& a, const Monomial& b, MonomialOrder order) {
  return order_compare(a, b, order) < 0;
}

}  // namespace mz
