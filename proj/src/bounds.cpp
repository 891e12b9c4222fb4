#include "dst/bounds.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

#include "dst/error.hpp"

namespace dst
{

std::uint64_t ceil_log2(std::uint64_t v)
{
  std::uint64_t k = 0;
  while (k < 64 && (std::uint64_t{1} << k) < v)
    ++k;
  return k;
}

std::uint64_t isqrt(std::uint64_t v)
{
  BigInt root;
  BigInt value(std::to_string(v));
  mpz_sqrt(root.get_mpz_t(), value.get_mpz_t());
  return std::stoull(root.get_str());
}

bool power_of_two_at_least(std::uint64_t exponent, BigInt const &x)
{
  if (x <= 0)
    return true;
  auto bits = static_cast<std::uint64_t>(mpz_sizeinbase(x.get_mpz_t(), 2));
  if (bits <= exponent)
    return true;
  if (bits == exponent + 1)
    return mpz_popcount(x.get_mpz_t()) == 1;
  return false;
}

namespace
{

BigInt power(std::uint64_t base, std::uint64_t exponent)
{
  BigInt result;
  mpz_ui_pow_ui(result.get_mpz_t(), static_cast<unsigned long>(base),
                static_cast<unsigned long>(exponent));
  return result;
}

template<typename Predicate>
ThresholdReport scan(std::uint64_t scan_limit, Predicate pred)
{
  constexpr std::uint64_t lo = 2;
  ThresholdReport report;
  report.scan_limit = scan_limit;
  if (scan_limit < lo)
    throw Error(ErrorKind::BadParameters, "scan limit must be at least 2");

  std::uint64_t count = scan_limit - lo + 1;
  std::vector<char> holds(count, 0);

  unsigned threads = std::max(1u, std::min<unsigned>(worker_threads(),
                                                     static_cast<unsigned>(std::min<std::uint64_t>(count, 1024))));
  // Strided assignment balances the growing cost of larger w.
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (std::uint64_t i = t; i < count; i += threads)
        holds[i] = pred(lo + i) ? 1 : 0;
    });
  }
  for (auto &th : pool)
    th.join();

  auto first = std::find(holds.begin(), holds.end(), 1);
  if (first == holds.end()) {
    report.threshold = scan_limit;
    report.first_holding = scan_limit;
    report.first_counterexample = scan_limit;
    return report;
  }
  report.first_holding = lo + static_cast<std::uint64_t>(first - holds.begin());

  auto last_fail = std::find(holds.rbegin(), holds.rend(), 0);
  report.threshold = last_fail == holds.rend()
                       ? lo
                       : lo + static_cast<std::uint64_t>(holds.rend() - last_fail);

  auto counter = std::find(first, holds.end(), 0);
  report.all_beyond_hold = counter == holds.end();
  if (!report.all_beyond_hold)
    report.first_counterexample = lo + static_cast<std::uint64_t>(counter - holds.begin());
  if (report.threshold > scan_limit)
    report.threshold = scan_limit;
  return report;
}

} // namespace

bool maroti_conflict(std::uint64_t v)
{
  return power_of_two_at_least(v, power(v, 4 * (1 + ceil_log2(v))));
}

bool babai_conflict(std::uint64_t w)
{
  return power_of_two_at_least(isqrt(w), power(w, 4 * (1 + ceil_log2(w))));
}

ThresholdReport main_threshold(std::uint64_t scan_limit)
{
  return scan(scan_limit, maroti_conflict);
}

ThresholdReport babai_threshold(std::uint64_t scan_limit)
{
  return scan(scan_limit, babai_conflict);
}

bool babai_min_degree_ok(PermGroup const &group, std::uint64_t cap)
{
  if (!is_primitive(group))
    throw Error(ErrorKind::PreconditionViolated, "group is not primitive");
  if (contains_alternating(group))
    throw Error(ErrorKind::PreconditionViolated,
                "group contains the alternating group of its degree");

  std::uint64_t delta = minimum_degree(group, cap);
  return 4 * delta * delta > group.degree();
}

unsigned worker_threads()
{
  if (char const *env = std::getenv("DST_THREADS")) {
    char *end = nullptr;
    long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n > 0)
      return static_cast<unsigned>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

} // namespace dst
