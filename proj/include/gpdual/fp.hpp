#pragma once

#include <cstdint>
#include <compare>

#include "gpdual/errors.hpp"

namespace gpdual {

/* Arithmetic context for F_p, p an odd prime above the small characteristics
 * that break skew normal forms and charpoly interpolation.  Elements are raw
 * uint32_t values in [0, p); every product goes through 64 bits, so any
 * p < 2^31 is safe. */
class PrimeField {
public:
  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (p < 11 || !is_prime(p)) {
      throw InvariantError("PrimeField: modulus must be an odd prime > 7, got " +
                           std::to_string(p));
    }
  }

  std::uint32_t modulus() const { return p_; }

  std::uint32_t reduce(std::int64_t x) const {
    std::int64_t r = x % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<std::uint32_t>(r);
  }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }

  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }

  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(a) * b) % p_);
  }

  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t r = 1;
    a %= p_;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  /* extended Euclid; division by zero is a caller bug */
  std::uint32_t inv(std::uint32_t a) const {
    if (a == 0) throw InvariantError("PrimeField: inverse of 0");
    std::int64_t t = 0, nt = 1;
    std::int64_t r = p_, nr = a % p_;
    while (nr != 0) {
      std::int64_t q = r / nr;
      std::int64_t tmp = t - q * nt;
      t = nt; nt = tmp;
      tmp = r - q * nr;
      r = nr; nr = tmp;
    }
    if (t < 0) t += p_;
    return static_cast<std::uint32_t>(t);
  }

  std::uint32_t div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }

  bool operator==(const PrimeField&) const = default;

private:
  static bool is_prime(std::uint32_t n) {
    if (n % 2 == 0) return false;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
      if (n % d == 0) return false;
    return true;
  }

  std::uint32_t p_;
};

}  // namespace gpdual
