// Brute-force reference computations used only by the tests. Nothing here
// touches the stabilizer chain or the search code it is checked against.

#ifndef DST_TESTS_ORACLES_HPP
#define DST_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "dst/graph.hpp"
#include "dst/group.hpp"
#include "dst/perm.hpp"

namespace oracle
{

using dst::Permutation;
using dst::Point;

// Closes the generators under multiplication.
inline std::set<Permutation> closure(std::vector<Permutation> const &gens)
{
  std::set<Permutation> seen{Permutation(gens.front().degree())};
  std::vector<Permutation> frontier{Permutation(gens.front().degree())};
  while (!frontier.empty()) {
    auto x = frontier.back();
    frontier.pop_back();
    for (auto const &g : gens) {
      auto y = x * g;
      if (seen.insert(y).second)
        frontier.push_back(y);
    }
  }
  return seen;
}

inline bool is_block(std::set<Permutation> const &elements, std::vector<Point> const &block,
                     std::size_t degree)
{
  std::vector<bool> in(degree, false);
  for (Point x : block)
    in[x] = true;
  for (auto const &g : elements) {
    std::size_t hits = 0;
    for (Point x : block)
      hits += in[g[x]];
    if (hits != 0 && hits != block.size())
      return false;
  }
  return true;
}

// Smallest block containing a and b, over all 2^v subsets.
inline std::vector<Point> minimal_block(std::set<Permutation> const &elements,
                                        std::size_t degree, Point a, Point b)
{
  std::vector<Point> best;
  for (std::uint32_t mask = 0; mask < (1u << degree); ++mask) {
    if (!(mask >> a & 1) || !(mask >> b & 1))
      continue;
    std::vector<Point> block;
    for (Point x = 0; x < degree; ++x)
      if (mask >> x & 1)
        block.push_back(x);
    if ((best.empty() || block.size() < best.size()) && is_block(elements, block, degree))
      best = block;
  }
  return best;
}

inline std::uint32_t image_mask(Permutation const &g, std::uint32_t mask)
{
  std::uint32_t image = 0;
  for (Point x = 0; x < g.degree(); ++x)
    if (mask >> x & 1)
      image |= 1u << g[x];
  return image;
}

// Orbits of the full element list on the power set, with their sizes.
inline std::vector<std::size_t> subset_orbit_sizes(std::set<Permutation> const &elements,
                                                   std::size_t degree)
{
  std::vector<char> seen(std::size_t{1} << degree, 0);
  std::vector<std::size_t> sizes;
  for (std::uint32_t s = 0; s < (1u << degree); ++s) {
    if (seen[s])
      continue;
    std::set<std::uint32_t> orbit;
    for (auto const &g : elements)
      orbit.insert(image_mask(g, s));
    for (auto o : orbit)
      seen[o] = 1;
    sizes.push_back(orbit.size());
  }
  return sizes;
}

// Automorphisms of a small graph by trying all n! vertex permutations.
inline std::size_t automorphism_count(dst::Graph const &x)
{
  std::size_t n = x.vertex_count();
  std::vector<Point> map(n);
  std::iota(map.begin(), map.end(), Point{0});
  std::size_t count = 0;
  do {
    if (dst::is_isomorphism(x, x, map))
      ++count;
  } while (std::next_permutation(map.begin(), map.end()));
  return count;
}

inline bool is_prime(std::size_t n)
{
  if (n < 2)
    return false;
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

inline std::size_t element_order(Permutation const &g)
{
  std::size_t order = 1;
  for (Permutation p = g; !p.is_identity(); p *= g)
    ++order;
  return order;
}

/*
 * True iff some k-coloring of the points has trivial stabilizer. A
 * nontrivial stabilizer always contains an element of prime order, so it is
 * enough to mark every coloring fixed by a prime-order element: those are the
 * colorings constant on its cycles.
 */
inline bool has_distinguishing_coloring(std::set<Permutation> const &elements,
                                        std::size_t degree, std::size_t k)
{
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < degree; ++i)
    total *= k;
  std::vector<char> fixed(total, 0);

  for (auto const &g : elements) {
    if (g.is_identity() || !is_prime(element_order(g)))
      continue;
    std::vector<std::vector<Point>> cycles;
    std::vector<bool> seen(degree, false);
    for (Point x = 0; x < degree; ++x) {
      if (seen[x])
        continue;
      auto &c = cycles.emplace_back();
      for (Point y = x; !seen[y]; y = g[y]) {
        seen[y] = true;
        c.push_back(y);
      }
    }
    std::vector<std::size_t> colour(cycles.size(), 0);
    for (;;) {
      std::uint64_t code = 0, weight = 1;
      std::vector<std::size_t> point_colour(degree);
      for (std::size_t c = 0; c < cycles.size(); ++c)
        for (Point x : cycles[c])
          point_colour[x] = colour[c];
      for (std::size_t x = 0; x < degree; ++x, weight *= k)
        code += point_colour[x] * weight;
      fixed[code] = 1;

      std::size_t i = 0;
      while (i < colour.size() && ++colour[i] == k)
        colour[i++] = 0;
      if (i == colour.size())
        break;
    }
  }
  return std::find(fixed.begin(), fixed.end(), 0) != fixed.end();
}

inline Permutation random_permutation(std::size_t degree, std::mt19937_64 &rng)
{
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation::from_images(std::move(images));
}

} // namespace oracle

#endif // DST_TESTS_ORACLES_HPP
