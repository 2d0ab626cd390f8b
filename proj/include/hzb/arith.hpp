#pragma once

#include <vector>

#include "hzb/rational.hpp"

namespace hzb {

// g = a*x + b*y with g = gcd(a, b) >= 1; inputs must not both be zero.
struct Egcd {
  Int g = 0;
  Int x = 0;
  Int y = 0;
};

Egcd egcd(Int a, Int b);

// The unique beta in (0, modulus) with (-c) * beta = 1 (mod modulus);
// 0 when modulus == 1. Requires c >= 1, modulus >= 1, gcd(c, modulus) = 1.
Int mod_inverse_of_negative(Int c, Int modulus);

// Terms of a negative (Hirzebruch-Jung) continued fraction; every term >= 2.
using ContinuedFraction = std::vector<Int>;

// Expansion of n/q as b1 - 1/(b2 - 1/(... - 1/bu)); empty for 1/1.
// Requires 1 <= q <= n and gcd(n, q) = 1.
ContinuedFraction cf_expand(Int n, Int q);

// Exact value of the expansion; 1/1 for the empty list.
Rational cf_eval(const ContinuedFraction& cf);

}  // namespace hzb
