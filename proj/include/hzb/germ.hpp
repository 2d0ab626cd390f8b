#pragma once

#include "hzb/rational.hpp"

namespace hzb {

// The surface germ z^m - x^k y^l. Build through make_germ, which enforces
// m >= 2, k >= 1, l >= 1, gcd(m,k,l) = 1 and (unless the caller opts out)
// k <= l.
struct Germ {
  Int m = 2;
  Int k = 1;
  Int l = 1;
  friend bool operator==(const Germ&, const Germ&) = default;
};

Germ make_germ(Int m, Int k, Int l, bool allow_unordered = false);

struct DerivedGcds {
  Int d = 1;      // gcd(k, l)
  Int k_bar = 1;  // k / d
  Int l_bar = 1;  // l / d
  Int d_k = 1;    // gcd(m, k)
  Int d_l = 1;    // gcd(m, l)
  friend bool operator==(const DerivedGcds&, const DerivedGcds&) = default;
};

DerivedGcds derive(const Germ& g);

}  // namespace hzb
