#pragma once

#include <cstdint>

#include "pcv/bignat.hpp"

namespace pcv {

// Exact primality for any 64-bit value: small trial division followed by a
// deterministic strong-pseudoprime test whose witness set covers all 64-bit
// inputs. No table required.
bool is_prime_u64(std::uint64_t n);

// Strong base-2 test combined with a strong Lucas test (Selfridge
// parameters). Deterministic; no known composite passes both, and agreement
// with is_prime_u64 holds throughout the 64-bit range. Verdicts on wider
// values are probabilistic and reports flag them as such.
bool is_probable_prime_big(const BigNat& n);

}  // namespace pcv
