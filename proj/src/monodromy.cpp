#include "hzb/monodromy.hpp"

#include "hzb/errors.hpp"

namespace hzb {

namespace {

FiberData make_fiber(Int chi, Int boundary) {
  const Int twice_genus = checked_sub(checked_sub(2, chi), boundary);
  if (twice_genus < 0 || twice_genus % 2 != 0)
    throw InvariantViolation("fiber Euler characteristic inconsistent with boundary count");
  return {chi, boundary, twice_genus / 2};
}

MonodromyDescriptor make_monodromy(Int order, Int numer, Int m) {
  return {order, order >= 2 ? m : 0, Rational(checked_neg(numer), order)};
}

}  // namespace

FiberData fiber_data_xside(const Germ& g) {
  const DerivedGcds dg = derive(g);
  const Int chi = checked_sub(checked_add(g.m, g.l), checked_mul(g.m, g.l));
  return make_fiber(chi, dg.d_l);
}

FiberData fiber_data_yside(const Germ& g) {
  const DerivedGcds dg = derive(g);
  const Int chi = checked_sub(checked_add(g.m, g.k), checked_mul(g.m, g.k));
  return make_fiber(chi, dg.d_k);
}

MonodromyDescriptor vertical_monodromy_xside(const Germ& g) {
  const DerivedGcds dg = derive(g);
  return make_monodromy(dg.l_bar, dg.k_bar, g.m);
}

MonodromyDescriptor vertical_monodromy_yside(const Germ& g) {
  const DerivedGcds dg = derive(g);
  return make_monodromy(dg.k_bar, dg.l_bar, g.m);
}

Int torus_intersection_number(const Germ& g) { return checked_neg(g.m); }

}  // namespace hzb
