#pragma once

#include "hzb/germ.hpp"
#include "hzb/rational.hpp"

namespace hzb {

// Topology of a Milnor fiber of one of the two plane-curve germs sitting
// over the axis circles: z^m - y^l on the x side, z^m - x^k on the y side.
struct FiberData {
  Int euler_characteristic = 0;
  Int boundary_components = 0;
  Int genus = 0;
  friend bool operator==(const FiberData&, const FiberData&) = default;
};

FiberData fiber_data_xside(const Germ& g);
FiberData fiber_data_yside(const Germ& g);

// First-return map of the fibration over an axis circle. fixed_points is 0
// for the identity (order 1); rotation is the local rotation angle at a
// fixed point as an exact fraction of a full turn.
struct MonodromyDescriptor {
  Int order = 1;
  Int fixed_points = 0;
  Rational rotation;
  friend bool operator==(const MonodromyDescriptor&, const MonodromyDescriptor&) = default;
};

MonodromyDescriptor vertical_monodromy_xside(const Germ& g);
MonodromyDescriptor vertical_monodromy_yside(const Germ& g);

// Intersection number of the two fiber boundary curves on the torus that
// separates the two pieces of the Milnor fiber boundary.
Int torus_intersection_number(const Germ& g);

}  // namespace hzb
