#pragma once

#include "oracles.hpp"
#include "pcv/kernels.hpp"
#include "pcv/prime_tables.hpp"

namespace testing_support {

// Shared fixtures; built once per test binary run.
inline const pcv::PrimeTables& tables_2m() {
  static const pcv::PrimeTables t = pcv::PrimeTables::build(2'000'000);
  return t;
}

inline const oracle::NaiveKit& kit_200k() {
  static const oracle::NaiveKit k(200'000);
  return k;
}

inline pcv::FactorCache& shared_factor_cache() {
  static pcv::FactorCache c;
  return c;
}

}  // namespace testing_support
