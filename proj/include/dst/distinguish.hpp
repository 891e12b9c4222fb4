#ifndef DST_DISTINGUISH_HPP
#define DST_DISTINGUISH_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "dst/group.hpp"
#include "dst/partition.hpp"

namespace dst
{

struct SearchBudget
{
  std::uint64_t element_cap = default_element_cap;
  // Largest degree for which the 2^v subset scan is attempted.
  std::size_t subset_scan_max_degree = 30;
  std::size_t max_colors = 8;
  // Colorings tested per k >= 3.
  std::uint64_t max_colorings = 100'000'000;
};

// True iff only the identity maps every cell onto itself.
bool is_distinguishing(PermGroup const &group, Partition const &partition,
                       std::uint64_t cap = default_element_cap);

// Least subset (shorter first, then lexicographic) whose setwise stabilizer is
// trivial, or nullopt if none exists.
std::optional<std::vector<Point>>
find_distinguishing_subset(PermGroup const &group, SearchBudget const &budget = {});

struct DistinguishingResult
{
  std::size_t number;
  // Least distinguishing partition with that many cells, cells labelled by
  // first occurrence.
  Partition witness;
};

DistinguishingResult distinguishing_partition(PermGroup const &group,
                                              SearchBudget const &budget = {});

inline std::size_t distinguishing_number(PermGroup const &group,
                                         SearchBudget const &budget = {})
{
  return distinguishing_partition(group, budget).number;
}

// Orbits of G on the power set, by averaging 2^{cycles(g)} over G.
BigInt subset_orbit_count(PermGroup const &group,
                          std::uint64_t cap = default_element_cap);

// (order - 1)^2 >= 2^min_degree, i.e. order >= 1 + 2^{min_degree/2}.
bool order_bound_holds(BigInt const &order, std::size_t min_degree);

struct Lemma1Report
{
  std::size_t distinguishing_number = 0;
  // Zero for the trivial group.
  std::size_t minimum_degree = 0;
  BigInt order;
  // Vacuously true when the distinguishing number is at most two.
  bool bound_ok = true;
};

Lemma1Report lemma1_check(PermGroup const &group, SearchBudget const &budget = {});

} // namespace dst

#endif // DST_DISTINGUISH_HPP
