#pragma once

#include <cstdint>
#include <vector>

#include "pcv/bignat.hpp"
#include "pcv/intmath.hpp"

namespace pcv {

// Cached prefix tables of the partition function p(n) and the strict
// partition function q(n), as exact integers. p(0) = q(0) = 1 by the
// empty-partition convention; the repeated-part count is p(n) - q(n).
// Immutable after build; concurrent readers are unrestricted.
class PartitionTable {
 public:
  // Fills 0..upto in one pass: p by the pentagonal-number recurrence, q by
  // the incremental product of (1 + x^k) truncated at the bound.
  static PartitionTable build(u64 upto);

  u64 upto() const { return upto_; }

  const BigNat& partition_number(u64 n) const;         // p(n)
  const BigNat& strict_partition_number(u64 n) const;  // q(n)
  BigNat repeated_part_count(u64 n) const;             // p(n) - q(n), >= 0

  // Membership in {p(n) : n >= 1} / {q(n) : n >= 1} by binary search over
  // the cached values. Requires the table's last entry to exceed v so the
  // answer is decided by the cached prefix.
  bool is_partition_value(const BigNat& v) const;
  bool is_strict_partition_value(const BigNat& v) const;

 private:
  void require(u64 n) const;

  u64 upto_ = 0;
  std::vector<BigNat> p_;
  std::vector<BigNat> q_;
};

}  // namespace pcv
