#include "pcv/partition.hpp"

#include <algorithm>
#include <string>

#include "pcv/errors.hpp"

namespace pcv {

PartitionTable PartitionTable::build(u64 upto) {
  PartitionTable t;
  t.upto_ = upto;

  // p via the pentagonal-number recurrence:
  // p(n) = sum_j (-1)^(j+1) [p(n - j(3j-1)/2) + p(n - j(3j+1)/2)].
  t.p_.resize(upto + 1);
  t.p_[0] = 1;
  for (u64 n = 1; n <= upto; ++n) {
    BigNat acc(0);
    for (u64 j = 1;; ++j) {
      const u64 g1 = j * (3 * j - 1) / 2;
      if (g1 > n) break;
      const bool plus = (j & 1) != 0;
      if (plus)
        acc += t.p_[n - g1];
      else
        acc -= t.p_[n - g1];
      const u64 g2 = j * (3 * j + 1) / 2;
      if (g2 <= n) {
        if (plus)
          acc += t.p_[n - g2];
        else
          acc -= t.p_[n - g2];
      }
    }
    t.p_[n] = std::move(acc);
  }

  // q as the coefficients of prod_k (1 + x^k) up to degree `upto`.
  t.q_.assign(upto + 1, BigNat(0));
  t.q_[0] = 1;
  for (u64 k = 1; k <= upto; ++k)
    for (u64 s = upto; s >= k; --s) t.q_[s] += t.q_[s - k];

  return t;
}

void PartitionTable::require(u64 n) const {
  if (n > upto_)
    throw KernelLimitError("partition index " + std::to_string(n) +
                               " beyond configured table size " +
                               std::to_string(upto_),
                           n);
}

const BigNat& PartitionTable::partition_number(u64 n) const {
  require(n);
  return p_[n];
}

const BigNat& PartitionTable::strict_partition_number(u64 n) const {
  require(n);
  return q_[n];
}

BigNat PartitionTable::repeated_part_count(u64 n) const {
  require(n);
  return p_[n] - q_[n];
}

bool PartitionTable::is_partition_value(const BigNat& v) const {
  // p(1), p(2), ... is strictly increasing, so the slice from index 1 is
  // searchable. The last entry must exceed v for the prefix to decide.
  if (upto_ < 1 || p_[upto_] <= v)
    throw KernelLimitError(
        "partition table too small to decide membership of " +
            big_to_string(v),
        upto_ + 1);
  return std::binary_search(p_.begin() + 1, p_.end(), v);
}

bool PartitionTable::is_strict_partition_value(const BigNat& v) const {
  if (upto_ < 1 || q_[upto_] <= v)
    throw KernelLimitError(
        "strict partition table too small to decide membership of " +
            big_to_string(v),
        upto_ + 1);
  // q is nondecreasing from index 1.
  return std::binary_search(q_.begin() + 1, q_.end(), v);
}

}  // namespace pcv
