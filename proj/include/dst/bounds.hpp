#ifndef DST_BOUNDS_HPP
#define DST_BOUNDS_HPP

#include <cstdint>
#include <optional>

#include "dst/group.hpp"

namespace dst
{

// Smallest k with 2^k >= v. Requires v >= 1.
std::uint64_t ceil_log2(std::uint64_t v);

// floor(sqrt(v)).
std::uint64_t isqrt(std::uint64_t v);

// 2^exponent >= x, decided from the bit length of x.
bool power_of_two_at_least(std::uint64_t exponent, BigInt const &x);

// 2^{v/4} >= v^{1+ceil(log2 v)}, checked as 2^v >= v^{4(1+ceil(log2 v))}.
bool maroti_conflict(std::uint64_t v);

// 2^{floor(sqrt w)} >= w^{4(1+ceil(log2 w))}: the same conflict with the
// minimum degree bounded below by floor(sqrt w)/2 instead of w/2.
bool babai_conflict(std::uint64_t w);

/**
 * Result of scanning a predicate over [2, scan_limit].
 *
 * `threshold` is the smallest v such that the predicate holds at every w in
 * [v, scan_limit]. `first_holding` is the smallest w where it holds at all;
 * `all_beyond_hold` says it never fails again after that point, otherwise
 * `first_counterexample` is the first failure past `first_holding`. If the
 * predicate never holds, threshold = scan_limit, all_beyond_hold is false
 * and first_counterexample = scan_limit.
 */
struct ThresholdReport
{
  std::uint64_t threshold = 0;
  std::uint64_t scan_limit = 0;
  std::uint64_t first_holding = 0;
  bool all_beyond_hold = false;
  std::optional<std::uint64_t> first_counterexample;
};

inline constexpr std::uint64_t default_main_scan = 100'000;
inline constexpr std::uint64_t default_babai_scan = std::uint64_t{1} << 22;

// Both scans run on worker_threads() threads; the report does not depend on
// the schedule.
ThresholdReport main_threshold(std::uint64_t scan_limit = default_main_scan);
ThresholdReport babai_threshold(std::uint64_t scan_limit = default_babai_scan);

// 4 * delta^2 > v for a primitive group not containing Alt(v). Throws
// Error(PreconditionViolated) if either condition fails.
bool babai_min_degree_ok(PermGroup const &group,
                         std::uint64_t cap = default_element_cap);

// DST_THREADS if set and positive, else the hardware concurrency.
unsigned worker_threads();

} // namespace dst

#endif // DST_BOUNDS_HPP
