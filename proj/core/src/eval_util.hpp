#pragma once

#include <cmath>
#include <optional>

#include "pcv/catalog.hpp"
#include "pcv/evaluate.hpp"
#include "pcv/kernels.hpp"

namespace pcv::detail {

// Shared by the c3.20 evaluator and the find_chain operation.
ChainResult chain_search(EvalContext& cx, u64 m, u64 start_bound);

// Saturating helpers for kernel-needs formulas.
inline u64 sat_mul(u64 a, u64 b) {
  u64 r;
  return __builtin_mul_overflow(a, b, &r) ? ~u64{0} : r;
}
inline u64 sat_add(u64 a, u64 b) {
  u64 r;
  return __builtin_add_overflow(a, b, &r) ? ~u64{0} : r;
}

// Upper bound for the n-th prime (n(ln n + ln ln n) for n >= 6, padded).
inline u64 nth_prime_upper(u64 n) { return nth_prime_upper_bound(n); }

// Scans k = lo..hi ascending. Returns Holds with the least witness {name, k}
// or Fails; in collector mode the scan continues past the first hit.
template <class Pred>
Verdict scan(EvalContext& cx, const char* name, u64 lo, u64 hi, Pred pred) {
  std::optional<u64> first;
  for (u64 k = lo; k <= hi && k >= lo; ++k) {
    cx.frontier = k;
    if (pred(k)) {
      if (!first) first = k;
      if (cx.collector)
        ++cx.collector->count;
      else
        break;
    }
  }
  if (first) return Verdict::holds1(name, *first);
  return Verdict::fails();
}

// Scans primes ascending from `start` (itself tested if prime-eligible)
// while p <= max_inclusive.
template <class Pred>
Verdict scan_primes(EvalContext& cx, const char* name, u64 start,
                    u64 max_inclusive, Pred pred) {
  std::optional<u64> first;
  u64 p = start <= 2 ? 2 : start;
  if (p > 2 && p % 2 == 0) ++p;
  if (!cx.tables().is_prime_u64(p)) p = cx.next_prime_leq(p, max_inclusive);
  while (p != 0 && p <= max_inclusive) {
    cx.frontier = p;
    if (pred(p)) {
      if (!first) first = p;
      if (cx.collector)
        ++cx.collector->count;
      else
        break;
    }
    p = cx.next_prime_leq(p, max_inclusive);
  }
  if (first) return Verdict::holds1(name, *first);
  return Verdict::fails();
}

// Representation scans n = k + m: k = lo..n-lo ascending, m = n - k.
template <class Pred>
Verdict scan_split(EvalContext& cx, u64 n, u64 lo, Pred pred) {
  std::optional<u64> first;
  if (n < 2 * lo) return Verdict::fails();
  for (u64 k = lo; k + lo <= n; ++k) {
    cx.frontier = k;
    if (pred(k, n - k)) {
      if (!first) first = k;
      if (cx.collector)
        ++cx.collector->count;
      else
        break;
    }
  }
  if (!first) return Verdict::fails();
  Verdict v = Verdict::holds();
  v.witness.emplace_back("k", *first);
  v.witness.emplace_back("m", n - *first);
  return v;
}

inline ConjectureSpec& add_entry(std::vector<ConjectureSpec>& out,
                                 const char* id, const char* anchor,
                                 const char* stmt, Kind kind, u64 domain_start,
                                 u64 desk_bound) {
  ConjectureSpec e;
  e.id = id;
  e.anchor = anchor;
  e.statement = stmt;
  e.kind = kind;
  e.domain_start = domain_start;
  e.desk_bound = desk_bound;
  out.push_back(std::move(e));
  return out.back();
}

void add_section2(std::vector<ConjectureSpec>& out);
void add_section3(std::vector<ConjectureSpec>& out);
void add_section4(std::vector<ConjectureSpec>& out);

}  // namespace pcv::detail
