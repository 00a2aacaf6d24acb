#pragma once

#include <bit>
#include <cstdint>
#include <numeric>

#include "maxclass/errors.hpp"

namespace maxclass {

using u128 = unsigned __int128;

inline constexpr u128 u128_one = 1;

inline int popcount128(u128 v) {
  return std::popcount(static_cast<uint64_t>(v)) +
         std::popcount(static_cast<uint64_t>(v >> 64));
}

inline int countr_zero128(u128 v) {
  auto lo = static_cast<uint64_t>(v);
  if (lo) return std::countr_zero(lo);
  return 64 + std::countr_zero(static_cast<uint64_t>(v >> 64));
}

// Element of K<a> over K = GF(2): bit i holds the coefficient of a^i.
// len = ord(a), a power of two in [4, 128]. Addition is xor; multiplication
// is cyclic convolution, i.e. xor of rotations.
struct CyclicElement {
  u128 bits = 0;
  uint32_t len = 0;

  bool is_zero() const { return bits == 0; }
  bool test(uint32_t i) const { return (bits >> (i % len)) & 1; }

  friend bool operator==(const CyclicElement& x, const CyclicElement& y) {
    return x.len == y.len && x.bits == y.bits;
  }
};

inline u128 cyc_mask(uint32_t len) {
  return len >= 128 ? ~u128{0} : (u128_one << len) - 1;
}

inline CyclicElement cyc_zero(uint32_t len) { return {0, len}; }
inline CyclicElement cyc_one(uint32_t len) { return {1, len}; }
inline CyclicElement cyc_all_ones(uint32_t len) { return {cyc_mask(len), len}; }

inline CyclicElement cyc_monomial(uint32_t len, uint64_t i) {
  return {u128_one << (i % len), len};
}

inline void cyc_check_len(const CyclicElement& x, const CyclicElement& y) {
  if (x.len != y.len)
    raise(Errc::spec_mismatch, "cyclic elements of different lengths");
}

inline CyclicElement operator+(CyclicElement x, const CyclicElement& y) {
  cyc_check_len(x, y);
  x.bits ^= y.bits;
  return x;
}

inline CyclicElement& operator+=(CyclicElement& x, const CyclicElement& y) {
  cyc_check_len(x, y);
  x.bits ^= y.bits;
  return x;
}

// x * a^k
inline CyclicElement cyc_shift(CyclicElement x, uint64_t k) {
  k %= x.len;
  if (k == 0) return x;
  x.bits = ((x.bits << k) | (x.bits >> (x.len - k))) & cyc_mask(x.len);
  return x;
}

inline CyclicElement operator*(const CyclicElement& x, const CyclicElement& y) {
  cyc_check_len(x, y);
  CyclicElement acc = cyc_zero(x.len);
  u128 v = x.bits;
  while (v) {
    int i = countr_zero128(v);
    v &= v - 1;
    acc.bits ^= cyc_shift(y, static_cast<uint64_t>(i)).bits;
  }
  return acc;
}

// augmentation: sum of coefficients
inline int cyc_parity(const CyclicElement& x) { return popcount128(x.bits) & 1; }

// Squaring is the Frobenius map: exponents double mod len, colliding pairs
// cancel over GF(2).
inline CyclicElement cyc_square(const CyclicElement& x) {
  CyclicElement r = cyc_zero(x.len);
  u128 v = x.bits;
  while (v) {
    int i = countr_zero128(v);
    v &= v - 1;
    r.bits ^= u128_one << ((2 * static_cast<uint64_t>(i)) % x.len);
  }
  return r;
}

inline CyclicElement cyc_pow(CyclicElement base, uint64_t e) {
  CyclicElement r = cyc_one(base.len);
  while (e) {
    if (e & 1) r = r * base;
    base = cyc_square(base);
    e >>= 1;
  }
  return r;
}

// Inverse of an augmentation-1 element: x^{len-1}, valid because every such
// element has 2-power order dividing len.
inline CyclicElement cyc_inv(const CyclicElement& x) {
  if (cyc_parity(x) != 1)
    raise(Errc::not_a_unit, "cyclic element with augmentation 0 has no inverse");
  return cyc_pow(x, x.len - 1);
}

// Exponent permutation i -> mult * i (mod len); mult must be odd.
inline CyclicElement cyc_perm(const CyclicElement& x, uint64_t mult) {
  CyclicElement r = cyc_zero(x.len);
  u128 v = x.bits;
  while (v) {
    int i = countr_zero128(v);
    v &= v - 1;
    r.bits |= u128_one << ((mult * static_cast<uint64_t>(i)) % x.len);
  }
  return r;
}

// Sum of all elements of the subgroup <a^d>.
inline CyclicElement cyc_subgroup_sum(uint32_t len, uint32_t d) {
  uint32_t step = std::gcd(d, len);
  if (step == 0) step = len;  // d = 0 gives the trivial subgroup
  CyclicElement r = cyc_zero(len);
  for (uint32_t i = 0; i < len; i += step) r.bits |= u128_one << i;
  return r;
}

}  // namespace maxclass
