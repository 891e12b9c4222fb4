#ifndef DST_GROUP_HPP
#define DST_GROUP_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "dst/partition.hpp"
#include "dst/perm.hpp"

namespace dst
{

using BigInt = mpz_class;

inline constexpr std::uint64_t default_element_cap = 1'000'000;

/**
 * A permutation group given by generators.
 *
 * The stabilizer chain is built on first use (thread-safe) with base points
 * taken as the smallest points moved by each successive pointwise stabilizer,
 * so all derived data is deterministic. Copies share the chain.
 */
class PermGroup
{
public:
  // Throws Error(EmptyGeneratorList) or Error(DegreeMismatch).
  explicit PermGroup(std::vector<Permutation> generators);

  static PermGroup trivial(std::size_t degree);

  std::size_t degree() const noexcept { return _degree; }
  std::vector<Permutation> const &generators() const noexcept { return _generators; }

  BigInt order() const;
  bool contains(Permutation const &g) const;

  // Base points of the nontrivial chain levels and their orbit lengths.
  std::vector<Point> base() const;
  std::vector<std::size_t> fundamental_orbit_lengths() const;

  // Every element exactly once, sorted by image table. Throws
  // Error(OrderExceedsCap) if |G| > cap. The list is cached.
  std::shared_ptr<std::vector<Permutation> const>
  elements(std::uint64_t cap = default_element_cap) const;

private:
  struct Chain;
  struct State;

  Chain const &chain() const;

  std::size_t _degree;
  std::vector<Permutation> _generators;
  std::shared_ptr<State> _state;
};

inline std::vector<Permutation>
enumerate_elements(PermGroup const &group, std::uint64_t cap = default_element_cap)
{
  return *group.elements(cap);
}

Partition orbits(PermGroup const &group);
bool is_transitive(PermGroup const &group);

// Smallest block containing {a, b}. Throws Error(NotTransitive) or
// Error(EqualPoints).
std::vector<Point> minimal_block(PermGroup const &group, Point a, Point b);

bool is_primitive(PermGroup const &group);

// A nontrivial block if the group is transitive but imprimitive, else empty.
std::vector<Point> nontrivial_block(PermGroup const &group);

// Throws Error(TrivialGroup) or Error(OrderExceedsCap).
std::size_t minimum_degree(PermGroup const &group,
                           std::uint64_t cap = default_element_cap);

bool setwise_stabilizer_is_trivial(PermGroup const &group,
                                   std::span<Point const> subset,
                                   std::uint64_t cap = default_element_cap);

// |G| >= v!/2.
bool contains_alternating(PermGroup const &group);

// Action on the lexicographically ordered subset_size-subsets.
PermGroup induced_subset_action(PermGroup const &group, std::size_t subset_size);

// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<Point>> lex_subsets(std::size_t n, std::size_t k);

BigInt factorial(std::size_t n);

// Group file text: "degree <v>" on line 1, then one generator per line in
// cycle notation. '#' starts a comment.
struct GroupFile
{
  struct Line
  {
    enum class Kind { Blank, Comment, Generator };
    Kind kind;
    // Comment lines: the full line. Generator lines: anything after the
    // permutation (e.g. a trailing comment).
    std::string text;
  };

  std::size_t degree = 0;
  std::vector<Permutation> generators;
  std::vector<Line> layout;
};

GroupFile parse_group_file(std::string_view text);
std::string format_group_file(GroupFile const &file);
std::string format_group_file(PermGroup const &group);

PermGroup load_group(std::string_view text);
PermGroup load_group_file(std::string const &path);

} // namespace dst

#endif // DST_GROUP_HPP
