#include "hzb/seifert.hpp"

#include <algorithm>
#include <numeric>

#include "hzb/arith.hpp"
#include "hzb/errors.hpp"

namespace hzb {

SeifertPresentation seifert_presentation(const Germ& g) {
  const DerivedGcds dg = derive(g);
  SeifertPresentation p;
  p.genus = checked_mul(g.m - 1, dg.d - 1);
  p.euler_integral = g.m;
  const auto add_family = [&](Int alpha, Int other) {
    if (alpha == 1) {
      p.trivial_leaf_count = checked_add(p.trivial_leaf_count, g.m);
      return;
    }
    const Int beta = mod_inverse_of_negative(other, alpha);
    p.leaves.insert(p.leaves.end(), static_cast<std::size_t>(g.m),
                    SeifertLeaf{alpha, beta});
  };
  add_family(dg.l_bar, dg.k_bar);
  add_family(dg.k_bar, dg.l_bar);
  return p;
}

Rational rational_euler_number(const SeifertPresentation& p) {
  Rational e(p.euler_integral);
  for (const SeifertLeaf& leaf : p.leaves) e -= Rational(leaf.beta, leaf.alpha);
  return e;
}

std::optional<LensSpace> lens_space_classification(const Germ& g) {
  const Int lo = std::min(g.k, g.l);
  const Int hi = std::max(g.k, g.l);
  if (lo == 1 && hi == 1) return make_lens(g.m, g.m - 1);
  if (g.m == 2 && lo == 1) return make_lens(checked_mul(2, hi), 1);
  return std::nullopt;
}

SeifertLeaf nielsen_to_seifert(Int omega, Int lambda) {
  if (lambda < 1) throw std::domain_error("nielsen_to_seifert needs lambda >= 1");
  if (lambda == 1) return {1, 0};
  Int w = omega % lambda;
  if (w < 0) w += lambda;
  if (std::gcd(w, lambda) != 1)
    throw std::domain_error("nielsen_to_seifert needs gcd(omega, lambda) = 1");
  const Egcd e = egcd(w, lambda);
  Int sigma = e.x % lambda;
  if (sigma < 0) sigma += lambda;
  return {lambda, sigma};
}

CappingLeaf capping_leaf(const Germ& g, Side side) {
  const DerivedGcds dg = derive(g);
  const Int alpha = side == Side::x ? dg.l_bar : dg.k_bar;
  const Int other = side == Side::x ? dg.k_bar : dg.l_bar;
  const Int beta = alpha == 1 ? 0 : mod_inverse_of_negative(other, alpha);
  const Rational r(checked_mul(checked_neg(g.m), beta), alpha);
  return {r.den, r.num};
}

Int euler_from_gluing(const Germ& g) {
  const DerivedGcds dg = derive(g);
  if (dg.d != 1 || dg.d_k != 1 || dg.d_l != 1)
    throw UnsupportedCaseError("euler_from_gluing needs m, k, l pairwise coprime");
  const Int beta_prime = mod_inverse_of_negative(g.k, g.l);
  const Int beta_second = mod_inverse_of_negative(g.l, g.k);
  // m = l*(-m*beta_second) + k*(-m*beta_prime) + k*l*ebar, solved for ebar;
  // the two capped pieces contribute Euler number 0 each.
  const Int known =
      checked_add(checked_mul(g.l, checked_mul(checked_neg(g.m), beta_second)),
                  checked_mul(g.k, checked_mul(checked_neg(g.m), beta_prime)));
  const Int rhs = checked_sub(g.m, known);
  const Int kl = checked_mul(g.k, g.l);
  if (rhs % kl != 0) throw InvariantViolation("gluing equation has no integral solution");
  return rhs / kl;
}

BetaPair beta_pair_identity(Int k, Int l) {
  if (k < 1 || l < 1) throw std::domain_error("beta_pair_identity needs k, l >= 1");
  if (std::gcd(k, l) != 1) throw std::domain_error("beta_pair_identity needs gcd(k, l) = 1");
  BetaPair r;
  r.beta_prime = mod_inverse_of_negative(k, l);
  r.beta_second = mod_inverse_of_negative(l, k);
  r.lhs = checked_add(
      1, checked_add(checked_mul(l, r.beta_second), checked_mul(k, r.beta_prime)));
  return r;
}

}  // namespace hzb
