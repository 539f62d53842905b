#pragma once

#include <cstdint>
#include <cmath>
#include <optional>

namespace pcv {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Floor square root, exact for the full 64-bit range.
inline u64 isqrt_u64(u64 n) {
  if (n == 0) return 0;
  u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && static_cast<u128>(r) * r > n) --r;
  while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Floor cube root, exact.
inline u64 icbrt_u64(u64 n) {
  if (n == 0) return 0;
  u64 r = static_cast<u64>(std::cbrt(static_cast<double>(n)));
  while (r > 0 && static_cast<u128>(r) * r * r > n) --r;
  while (static_cast<u128>(r + 1) * (r + 1) * (r + 1) <= n) ++r;
  return r;
}

inline u64 mulmod_u64(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

inline u64 powmod_u64(u64 base, u64 exp, u64 mod) {
  u64 result = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) result = mulmod_u64(result, base, mod);
    base = mulmod_u64(base, base, mod);
    exp >>= 1;
  }
  return result;
}

inline std::optional<u64> checked_mul_u64(u64 a, u64 b) {
  u64 r;
  if (__builtin_mul_overflow(a, b, &r)) return std::nullopt;
  return r;
}

inline std::optional<u64> checked_add_u64(u64 a, u64 b) {
  u64 r;
  if (__builtin_add_overflow(a, b, &r)) return std::nullopt;
  return r;
}

inline u64 gcd_u64(u64 a, u64 b) {
  while (b != 0) {
    u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace pcv
