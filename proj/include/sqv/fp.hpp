#pragma once

#include <cstdint>

#include "sqv/errors.hpp"

namespace sqv {

// Arithmetic mod a small prime p. Values are kept in [0, p).
using fp_t = std::uint32_t;

inline fp_t fp_norm(long long a, fp_t p) {
  long long r = a % static_cast<long long>(p);
  if (r < 0) r += p;
  return static_cast<fp_t>(r);
}

inline fp_t fp_add(fp_t a, fp_t b, fp_t p) { return (a + b) % p; }
inline fp_t fp_sub(fp_t a, fp_t b, fp_t p) { return (a + p - b) % p; }
inline fp_t fp_mul(fp_t a, fp_t b, fp_t p) {
  return static_cast<fp_t>((static_cast<std::uint64_t>(a) * b) % p);
}

inline fp_t fp_pow(fp_t a, std::uint64_t e, fp_t p) {
  fp_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = fp_mul(r, a, p);
    a = fp_mul(a, a, p);
    e >>= 1;
  }
  return r;
}

inline fp_t fp_inv(fp_t a, fp_t p) {
  require_internal(a % p != 0, "fp_inv: division by zero");
  return fp_pow(a, p - 2, p);
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace sqv
