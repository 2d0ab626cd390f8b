#include "hzb/germ.hpp"

#include <numeric>
#include <string>

#include "hzb/errors.hpp"

namespace hzb {

Germ make_germ(Int m, Int k, Int l, bool allow_unordered) {
  if (k < 1 || l < 1) throw std::domain_error("exponents k and l must be >= 1");
  if (m < 2) throw NotSingularError("m must be >= 2 for the germ to be singular");
  const Int g = std::gcd(m, std::gcd(k, l));
  if (g != 1)
    throw IrreducibilityError("gcd(m,k,l) = " + std::to_string(g) +
                              "; an irreducible germ needs gcd(m,k,l) = 1");
  if (k > l && !allow_unordered)
    throw OrderingError("k > l; swap the x and y exponents or opt in to unordered input");
  return {m, k, l};
}

DerivedGcds derive(const Germ& g) {
  const Int d = std::gcd(g.k, g.l);
  return {d, g.k / d, g.l / d, std::gcd(g.m, g.k), std::gcd(g.m, g.l)};
}

}  // namespace hzb
