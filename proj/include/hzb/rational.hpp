#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace hzb {

using Int = std::int64_t;

// Every sum and product in the library goes through these helpers: the
// arithmetic is exact, so a value that does not fit in 64 bits is an error,
// never a silent wrap.

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in exact arithmetic");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in exact arithmetic");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in exact arithmetic");
  return r;
}

inline Int checked_neg(Int a) { return checked_sub(0, a); }

// Exact fraction, normalized on construction: den >= 1, gcd(|num|, den) = 1.
struct Rational {
  Int num = 0;
  Int den = 1;

  Rational() = default;
  Rational(Int value) : num(value), den(1) {}
  Rational(Int n, Int d) : num(n), den(d) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (den < 0) {
      num = checked_neg(num);
      den = checked_neg(den);
    }
    const Int g = std::gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  Rational inv() const {
    if (num == 0) throw std::domain_error("reciprocal of zero");
    return {den, num};
  }

  bool positive() const { return num > 0; }

  std::string str() const {
    return den == 1 ? std::to_string(num)
                    : std::to_string(num) + "/" + std::to_string(den);
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return {checked_add(checked_mul(a.num, b.den), checked_mul(b.num, a.den)),
            checked_mul(a.den, b.den)};
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return {checked_sub(checked_mul(a.num, b.den), checked_mul(b.num, a.den)),
            checked_mul(a.den, b.den)};
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return {checked_mul(a.num, b.num), checked_mul(a.den, b.den)};
  }
  friend Rational operator/(const Rational& a, const Rational& b) { return a * b.inv(); }
  friend Rational operator-(const Rational& a) { return {checked_neg(a.num), a.den}; }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend bool operator<(const Rational& a, const Rational& b) {
    return checked_mul(a.num, b.den) < checked_mul(b.num, a.den);
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }
};

}  // namespace hzb
