#include "hzb/normalization.hpp"

#include <numeric>

#include "hzb/arith.hpp"
#include "hzb/errors.hpp"

namespace hzb {

LensSpace make_lens(Int n, Int q) {
  if (n < 1) throw std::domain_error("lens space needs n >= 1");
  if (n == 1) {
    if (q != 1) throw std::domain_error("L(1, q) is only defined for q = 1");
    return {1, 1};
  }
  if (q < 1 || q >= n) throw std::domain_error("lens space needs 1 <= q < n");
  if (std::gcd(n, q) != 1) throw std::domain_error("lens space needs gcd(n, q) = 1");
  return {n, q};
}

LensSpace normalization_boundary(const Germ& g) {
  const DerivedGcds dg = derive(g);
  const Int dkdl = checked_mul(dg.d_k, dg.d_l);
  if (g.m % dkdl != 0)
    throw InvariantViolation("gcd(m,k) * gcd(m,l) does not divide m");
  const Int n = g.m / dkdl;

  // smallest positive solution of lambda * l = -k * d_l (mod m)
  Int target = checked_neg(checked_mul(g.k, dg.d_l)) % g.m;
  if (target < 0) target += g.m;
  Int lambda0 = 0;
  for (Int lam = 1; lam <= g.m; ++lam) {
    if (checked_mul(lam, g.l) % g.m == target) {
      lambda0 = lam;
      break;
    }
  }
  if (lambda0 == 0)
    throw InvariantViolation("normalization congruence has no solution");
  if (lambda0 % dg.d_k != 0)
    throw InvariantViolation("congruence solution not divisible by gcd(m,k)");

  if (n == 1) return {1, 1};
  const Int q = (lambda0 / dg.d_k) % n;
  if (q == 0 || std::gcd(n, q) != 1)
    throw InvariantViolation("normalization produced an invalid lens quotient");
  return make_lens(n, q);
}

PlumbingGraph normalization_plumbing(const Germ& g) {
  const LensSpace ls = normalization_boundary(g);
  const ContinuedFraction cf = cf_expand(ls.n, ls.q);
  std::vector<Int> weights;
  weights.reserve(cf.size());
  for (Int b : cf) weights.push_back(checked_neg(b));
  return build_bamboo(weights);
}

bool lens_equivalent(const LensSpace& a, const LensSpace& b,
                     bool orientation_preserving) {
  if (a.n != b.n) return false;
  if (a.n == 1) return true;
  const Int n = a.n;
  const auto congruent = [n](Int x, Int y) { return (x - y) % n == 0; };
  bool same = congruent(b.q, a.q) || congruent(checked_mul(a.q, b.q), 1);
  if (!orientation_preserving)
    same = same || congruent(checked_add(a.q, b.q), 0) ||
           congruent(checked_mul(a.q, b.q), -1);
  return same;
}

}  // namespace hzb
