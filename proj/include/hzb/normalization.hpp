#pragma once

#include <string>

#include "hzb/germ.hpp"
#include "hzb/plumbing.hpp"

namespace hzb {

// Lens space L(n, q); n = 1 (with q = 1) is the 3-sphere.
struct LensSpace {
  Int n = 1;
  Int q = 1;
  friend bool operator==(const LensSpace&, const LensSpace&) = default;
  std::string str() const {
    return "L(" + std::to_string(n) + "," + std::to_string(q) + ")";
  }
};

// Validates n >= 1 and, for n >= 2, 1 <= q < n with gcd(n, q) = 1.
LensSpace make_lens(Int n, Int q);

// Boundary of the normalization of the germ's surface.
LensSpace normalization_boundary(const Germ& g);

// Its canonical bamboo; the empty graph for the 3-sphere.
PlumbingGraph normalization_plumbing(const Germ& g);

// Classical lens space classification: L(n,q) ~ L(n,q') iff q' = q or
// q*q' = 1 (mod n); the mirror classes q' = -q and q*q' = -1 are accepted
// as well when orientation_preserving is false.
bool lens_equivalent(const LensSpace& a, const LensSpace& b,
                     bool orientation_preserving);

}  // namespace hzb
