#include "hzb/arith.hpp"

#include <numeric>

#include "hzb/errors.hpp"

namespace hzb {

Egcd egcd(Int a, Int b) {
  if (a == 0 && b == 0) throw std::domain_error("egcd(0, 0) is undefined");
  Int old_r = a, r = b;
  Int old_x = 1, x = 0;
  Int old_y = 0, y = 1;
  while (r != 0) {
    const Int q = old_r / r;
    Int tmp = checked_sub(old_r, checked_mul(q, r));
    old_r = r;
    r = tmp;
    tmp = checked_sub(old_x, checked_mul(q, x));
    old_x = x;
    x = tmp;
    tmp = checked_sub(old_y, checked_mul(q, y));
    old_y = y;
    y = tmp;
  }
  if (old_r < 0) {
    old_r = checked_neg(old_r);
    old_x = checked_neg(old_x);
    old_y = checked_neg(old_y);
  }
  return {old_r, old_x, old_y};
}

namespace {

// inverse of a modulo m for 0 < a < m, gcd(a, m) = 1, m >= 2; result in (0, m)
Int mod_inverse(Int a, Int modulus) {
  const Egcd e = egcd(a, modulus);
  if (e.g != 1) throw std::domain_error("modular inverse requires coprime arguments");
  Int r = e.x % modulus;
  if (r < 0) r += modulus;
  return r;
}

}  // namespace

Int mod_inverse_of_negative(Int c, Int modulus) {
  if (c < 1) throw std::domain_error("mod_inverse_of_negative: c must be positive");
  if (modulus < 1) throw std::domain_error("mod_inverse_of_negative: modulus must be >= 1");
  if (std::gcd(c, modulus) != 1)
    throw std::domain_error("mod_inverse_of_negative: gcd(c, modulus) must be 1");
  if (modulus == 1) return 0;
  const Int neg_c = modulus - c % modulus;  // c % modulus != 0 since coprime
  return mod_inverse(neg_c, modulus);
}

ContinuedFraction cf_expand(Int n, Int q) {
  if (n < 1 || q < 1 || q > n) throw std::domain_error("cf_expand requires 1 <= q <= n");
  if (std::gcd(n, q) != 1) throw std::domain_error("cf_expand requires gcd(n, q) = 1");
  if (n == 1) return {};
  ContinuedFraction terms;
  while (q > 0) {
    const Int b = (n + q - 1) / q;  // ceil(n / q)
    terms.push_back(b);
    const Int next_q = checked_sub(checked_mul(b, q), n);
    n = q;
    q = next_q;
  }
  for (Int b : terms)
    if (b < 2) throw InvariantViolation("cf_expand produced a term below 2");
  return terms;
}

Rational cf_eval(const ContinuedFraction& cf) {
  for (Int b : cf)
    if (b < 2) throw std::domain_error("continued fraction terms must be >= 2");
  Rational acc(1);
  bool first = true;
  for (auto it = cf.rbegin(); it != cf.rend(); ++it) {
    if (first) {
      acc = Rational(*it);
      first = false;
    } else {
      acc = Rational(*it) - acc.inv();
    }
  }
  return acc;
}

}  // namespace hzb
