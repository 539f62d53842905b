#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace pcv {

// Arbitrary-precision nonnegative integer. GMP supplies the arithmetic;
// every value this project stores in a BigNat is >= 0.
using BigNat = mpz_class;

inline BigNat big_from_u64(std::uint64_t v) {
  return BigNat(static_cast<unsigned long>(v));
}

inline std::optional<std::uint64_t> big_to_u64(const BigNat& v) {
  if (v < 0 || !v.fits_ulong_p()) return std::nullopt;
  return static_cast<std::uint64_t>(v.get_ui());
}

// Bit length; 0 has size 1 under GMP's convention, which is fine for the
// budget checks this feeds.
inline std::size_t big_bits(const BigNat& v) {
  return mpz_sizeinbase(v.get_mpz_t(), 2);
}

inline std::string big_to_string(const BigNat& v) { return v.get_str(); }

}  // namespace pcv
