#include "dst/distinguish.hpp"

#include <algorithm>
#include <numeric>

#include "dst/error.hpp"

namespace dst
{

namespace
{

/*
 * Tests colorings against the nonidentity elements of a group. Elements are
 * tried in order of increasing support since small-support elements are the
 * ones most likely to preserve a coloring; the last element that preserved a
 * coloring is tried first on the next call.
 */
class PreservationTester
{
public:
  PreservationTester(PermGroup const &group, std::uint64_t cap)
  {
    for (auto const &g : *group.elements(cap))
      if (!g.is_identity())
        _elements.push_back(&g);
    _keep_alive = group.elements(cap);
    std::stable_sort(_elements.begin(), _elements.end(),
                     [](Permutation const *a, Permutation const *b) {
                       return support_size(*a) < support_size(*b);
                     });
  }

  // True iff some nonidentity element preserves every color class.
  template<typename Color>
  bool some_element_preserves(std::vector<Color> const &color)
  {
    if (_elements.empty())
      return false;
    if (preserves(*_elements[_hint], color))
      return true;
    for (std::size_t i = 0; i < _elements.size(); ++i) {
      if (i != _hint && preserves(*_elements[i], color)) {
        _hint = i;
        return true;
      }
    }
    return false;
  }

  // True iff some nonidentity element maps `subset` onto itself.
  bool some_element_stabilizes(std::vector<Point> const &subset,
                               std::vector<char> const &member)
  {
    if (_elements.empty())
      return false;
    if (stabilizes(*_elements[_hint], subset, member))
      return true;
    for (std::size_t i = 0; i < _elements.size(); ++i) {
      if (i != _hint && stabilizes(*_elements[i], subset, member)) {
        _hint = i;
        return true;
      }
    }
    return false;
  }

private:
  template<typename Color>
  static bool preserves(Permutation const &g, std::vector<Color> const &color)
  {
    for (Point x = 0; x < color.size(); ++x)
      if (color[g[x]] != color[x])
        return false;
    return true;
  }

  static bool stabilizes(Permutation const &g, std::vector<Point> const &subset,
                         std::vector<char> const &member)
  {
    for (Point x : subset)
      if (!member[g[x]])
        return false;
    return true;
  }

  std::shared_ptr<std::vector<Permutation> const> _keep_alive;
  std::vector<Permutation const *> _elements;
  std::size_t _hint = 0;
};

// Restricted growth strings with exactly k blocks, in lexicographic order.
class ColoringSearch
{
public:
  ColoringSearch(PreservationTester &tester, std::size_t degree, std::size_t k,
                 std::uint64_t budget)
    : _tester(tester), _k(k), _budget(budget), _color(degree, 0)
  {}

  std::optional<std::vector<unsigned char>> run()
  {
    if (_color.empty() || _k > _color.size())
      return std::nullopt;
    _color[0] = 0;
    if (extend(1, 1))
      return _color;
    return std::nullopt;
  }

  std::uint64_t tested() const noexcept { return _tested; }

private:
  bool extend(std::size_t pos, std::size_t used)
  {
    if (_color.size() - pos < _k - used)
      return false;

    if (pos == _color.size()) {
      if (++_tested > _budget)
        throw Error(ErrorKind::SearchBudgetExceeded,
                    "coloring budget of " + std::to_string(_budget) +
                      " exhausted at k = " + std::to_string(_k));
      return !_tester.some_element_preserves(_color);
    }

    std::size_t limit = std::min(used + 1, _k);
    for (std::size_t c = 0; c < limit; ++c) {
      _color[pos] = static_cast<unsigned char>(c);
      if (extend(pos + 1, std::max(used, c + 1)))
        return true;
    }
    return false;
  }

  PreservationTester &_tester;
  std::size_t _k;
  std::uint64_t _budget;
  std::vector<unsigned char> _color;
  std::uint64_t _tested = 0;
};

std::optional<std::vector<Point>>
scan_subsets(PreservationTester &tester, std::size_t degree)
{
  std::vector<char> member(degree, 0);

  // A subset works iff its complement does, so sizes past degree/2 add
  // nothing to a shortest-first scan.
  for (std::size_t size = 0; size <= degree / 2; ++size) {
    std::vector<Point> subset(size);
    std::iota(subset.begin(), subset.end(), Point{0});
    for (;;) {
      for (Point x : subset)
        member[x] = 1;
      bool stabilized = tester.some_element_stabilizes(subset, member);
      for (Point x : subset)
        member[x] = 0;
      if (!stabilized)
        return subset;

      std::size_t i = size;
      while (i > 0 && subset[i - 1] == degree - size + i - 1)
        --i;
      if (i == 0)
        break;
      ++subset[i - 1];
      for (std::size_t j = i; j < size; ++j)
        subset[j] = subset[j - 1] + 1;
    }
  }
  return std::nullopt;
}

} // namespace

bool is_distinguishing(PermGroup const &group, Partition const &partition,
                       std::uint64_t cap)
{
  if (partition.degree() != group.degree())
    throw Error(ErrorKind::DegreeMismatch,
                "partition of " + std::to_string(partition.degree()) +
                  " points against a group of degree " +
                  std::to_string(group.degree()));

  PreservationTester tester(group, cap);
  return !tester.some_element_preserves(partition.labels());
}

std::optional<std::vector<Point>>
find_distinguishing_subset(PermGroup const &group, SearchBudget const &budget)
{
  if (group.degree() > budget.subset_scan_max_degree)
    throw Error(ErrorKind::SearchBudgetExceeded,
                "subset scan limited to degree " +
                  std::to_string(budget.subset_scan_max_degree) + ", got " +
                  std::to_string(group.degree()));

  PreservationTester tester(group, budget.element_cap);
  return scan_subsets(tester, group.degree());
}

DistinguishingResult distinguishing_partition(PermGroup const &group,
                                              SearchBudget const &budget)
{
  std::size_t v = group.degree();
  if (group.order() == 1)
    return {1, Partition::single_cell(v)};

  if (auto subset = find_distinguishing_subset(group, budget)) {
    std::vector<std::size_t> labels(v, 1);
    for (Point x : *subset)
      labels[x] = 0;
    return {2, Partition::from_labels(labels)};
  }

  PreservationTester tester(group, budget.element_cap);
  for (std::size_t k = 3; k <= v; ++k) {
    if (k > budget.max_colors)
      throw Error(ErrorKind::SearchBudgetExceeded,
                  "no distinguishing partition with at most " +
                    std::to_string(budget.max_colors) + " cells");

    ColoringSearch search(tester, v, k, budget.max_colorings);
    if (auto coloring = search.run()) {
      std::vector<std::size_t> labels(coloring->begin(), coloring->end());
      return {k, Partition::from_labels(labels)};
    }
  }

  // Unreachable for a valid group: the all-singleton partition distinguishes.
  return {v, Partition::singletons(v)};
}

BigInt subset_orbit_count(PermGroup const &group, std::uint64_t cap)
{
  BigInt total = 0;
  for (auto const &g : *group.elements(cap)) {
    BigInt fixed;
    mpz_ui_pow_ui(fixed.get_mpz_t(), 2, static_cast<unsigned long>(cycle_count(g)));
    total += fixed;
  }

  BigInt order = group.order();
  if (total % order != 0)
    throw Error(ErrorKind::NonIntegerAverage,
                "fixed-subset total " + total.get_str() +
                  " not divisible by group order " + order.get_str());
  return total / order;
}

bool order_bound_holds(BigInt const &order, std::size_t min_degree)
{
  BigInt lhs = order - 1;
  lhs *= lhs;
  BigInt rhs;
  mpz_ui_pow_ui(rhs.get_mpz_t(), 2, static_cast<unsigned long>(min_degree));
  return lhs >= rhs;
}

Lemma1Report lemma1_check(PermGroup const &group, SearchBudget const &budget)
{
  Lemma1Report report;
  report.order = group.order();
  report.distinguishing_number = distinguishing_number(group, budget);
  if (report.order > 1)
    report.minimum_degree = minimum_degree(group, budget.element_cap);
  if (report.distinguishing_number >= 3)
    report.bound_ok = order_bound_holds(report.order, report.minimum_degree);
  return report;
}

} // namespace dst
