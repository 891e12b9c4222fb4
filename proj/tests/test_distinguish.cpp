#include <doctest.h>

#include "dst/corpus.hpp"
#include "dst/distinguish.hpp"
#include "dst/error.hpp"
#include "oracles.hpp"

using namespace dst;

namespace
{

PermGroup pairs5() { return induced_subset_action(corpus_group("symmetric_5"), 2); }

} // namespace

TEST_CASE("partition text format")
{
  auto p = parse_partition("1 3 5; 2 4", 5);
  CHECK(p.cell_count() == 2);
  CHECK(p.cell_of(0) == p.cell_of(2));
  CHECK(p.cell_of(1) != p.cell_of(0));
  CHECK(format_partition(p) == "1 3 5; 2 4");
  CHECK(parse_partition(format_partition(p), 5) == p);

  CHECK_THROWS_AS(parse_partition("1 2; 3", 4), Error);
  CHECK_THROWS_AS(parse_partition("1 2; 2 3", 3), Error);
  CHECK_THROWS_AS(parse_partition("1 2;; 3", 3), Error);
  CHECK_THROWS_AS(parse_partition("1 x; 2 3", 3), Error);
  CHECK_THROWS_AS(parse_partition("1 2; 3 9", 3), Error);

  CHECK(Partition::from_labels({7, 7, 3}) == Partition::from_labels({0, 0, 1}));
}

TEST_CASE("is_distinguishing")
{
  for (char const *name : {"symmetric_4", "cyclic_7", "mathieu_11"}) {
    auto g = corpus_group(name);
    CHECK(is_distinguishing(g, Partition::singletons(g.degree())));
    CHECK_FALSE(is_distinguishing(g, Partition::single_cell(g.degree())));
  }
  CHECK(is_distinguishing(PermGroup::trivial(4), Partition::single_cell(4)));

  auto g = pairs5();
  for (std::uint32_t mask = 1; mask + 1 < (1u << 10); ++mask) {
    std::vector<std::size_t> labels(10);
    for (Point x = 0; x < 10; ++x)
      labels[x] = mask >> x & 1;
    CHECK_FALSE(is_distinguishing(g, Partition::from_labels(labels)));
  }

  CHECK_THROWS_AS(is_distinguishing(g, Partition::singletons(9)), Error);
}

TEST_CASE("find_distinguishing_subset")
{
  auto empty = find_distinguishing_subset(PermGroup::trivial(3));
  REQUIRE(empty);
  CHECK(empty->empty());

  auto c4 = find_distinguishing_subset(corpus_group("cyclic_4"));
  REQUIRE(c4);
  CHECK(*c4 == std::vector<Point>{0});

  CHECK_FALSE(find_distinguishing_subset(pairs5()));

  // |M11| = 7920 > 2^11, so no subset orbit can be regular.
  CHECK_FALSE(find_distinguishing_subset(corpus_group("mathieu_11")));

  SearchBudget tight;
  tight.subset_scan_max_degree = 9;
  try {
    find_distinguishing_subset(pairs5(), tight);
    FAIL("expected budget error");
  } catch (Error const &e) {
    CHECK(e.kind() == ErrorKind::SearchBudgetExceeded);
  }
}

TEST_CASE("distinguishing_number")
{
  CHECK(distinguishing_number(PermGroup::trivial(1)) == 1);
  CHECK(distinguishing_number(PermGroup::trivial(5)) == 1);
  for (std::size_t n = 2; n <= 8; ++n)
    CHECK(distinguishing_number(corpus_group("symmetric_" + std::to_string(n))) == n);
  for (std::size_t n = 4; n <= 8; ++n)
    CHECK(distinguishing_number(corpus_group("alternating_" + std::to_string(n))) == n - 1);
  CHECK(distinguishing_number(pairs5()) == 3);
  CHECK(distinguishing_number(corpus_group("dihedral_5")) == 3);
  CHECK(distinguishing_number(corpus_group("dihedral_6")) == 2);

  auto result = distinguishing_partition(pairs5());
  CHECK(result.witness.cell_count() == 3);
  CHECK(is_distinguishing(pairs5(), result.witness));

  SearchBudget few_colors;
  few_colors.max_colors = 4;
  CHECK_THROWS_AS(distinguishing_number(corpus_group("symmetric_6"), few_colors), Error);

  SearchBudget few_colorings;
  few_colorings.max_colorings = 10;
  CHECK_THROWS_AS(distinguishing_number(corpus_group("symmetric_6"), few_colorings), Error);
}

TEST_CASE("Mathieu distinguishing numbers agree with the prime-order oracle")
{
  for (char const *name : {"mathieu_11", "mathieu_12"}) {
    CAPTURE(name);
    auto g = corpus_group(name);
    auto elements = oracle::closure(g.generators());
    auto d = distinguishing_number(g);
    CHECK(d == 4);
    CHECK(oracle::has_distinguishing_coloring(elements, g.degree(), d));
    CHECK_FALSE(oracle::has_distinguishing_coloring(elements, g.degree(), d - 1));
  }
}

TEST_CASE("distinguishing numbers agree with the oracle across the small corpus")
{
  for (auto const &entry : corpus()) {
    auto g = load_group(entry.text);
    if (g.degree() > 10 || g.order() > 10'000 || g.order() == 1)
      continue;
    CAPTURE(entry.name);
    auto elements = oracle::closure(g.generators());
    auto d = distinguishing_number(g);
    CHECK(oracle::has_distinguishing_coloring(elements, g.degree(), d));
    if (d > 1)
      CHECK_FALSE(oracle::has_distinguishing_coloring(elements, g.degree(), d - 1));
  }
}

TEST_CASE("subset_orbit_count")
{
  CHECK(subset_orbit_count(PermGroup::trivial(6)) == 64);
  CHECK(subset_orbit_count(corpus_group("cyclic_3")) == 4);
  CHECK(subset_orbit_count(corpus_group("symmetric_3")) == 4);

  for (auto const &entry : corpus()) {
    auto g = load_group(entry.text);
    if (g.degree() > 12 || g.order() > 10'000)
      continue;
    CAPTURE(entry.name);
    auto elements = oracle::closure(g.generators());
    auto sizes = oracle::subset_orbit_sizes(elements, g.degree());
    CHECK(subset_orbit_count(g) == BigInt(sizes.size()));
  }
}

TEST_CASE("no distinguishing subset bounds every subset orbit by |G|/2")
{
  for (auto const &entry : corpus()) {
    auto g = load_group(entry.text);
    if (g.degree() > 10 || g.order() > 10'000)
      continue;
    if (find_distinguishing_subset(g))
      continue;
    CAPTURE(entry.name);
    auto elements = oracle::closure(g.generators());
    for (auto size : oracle::subset_orbit_sizes(elements, g.degree()))
      CHECK(2 * size <= elements.size());
  }
}

TEST_CASE("subset witness exists iff D <= 2")
{
  for (auto const &entry : corpus()) {
    auto g = load_group(entry.text);
    if (g.degree() > 30 || g.order() > 100'000)
      continue;
    CAPTURE(entry.name);
    CHECK(find_distinguishing_subset(g).has_value() == (distinguishing_number(g) <= 2));
  }
}

TEST_CASE("subgroups never need more cells")
{
  for (auto const &entry : corpus()) {
    auto g = load_group(entry.text);
    if (g.generators().size() < 2 || g.degree() > 12 || g.order() > 100'000)
      continue;
    CAPTURE(entry.name);
    for (auto const &gen : g.generators()) {
      PermGroup h({gen});
      CHECK(g.contains(gen));
      CHECK(distinguishing_number(h) <= distinguishing_number(g));
    }
  }
  CHECK(corpus_group("symmetric_6").contains(corpus_group("alternating_6").generators()[1]));
  CHECK(distinguishing_number(corpus_group("alternating_6")) <=
        distinguishing_number(corpus_group("symmetric_6")));
}

TEST_CASE("lemma1_check")
{
  CHECK(order_bound_holds(3, 2));
  CHECK_FALSE(order_bound_holds(2, 2));
  CHECK(order_bound_holds(5, 4));
  CHECK_FALSE(order_bound_holds(4, 4));
  // Odd exponent: 1 + 2^{3/2} ~ 3.83, so 4 is enough and 3 is not.
  CHECK(order_bound_holds(4, 3));
  CHECK_FALSE(order_bound_holds(3, 3));

  auto s4 = lemma1_check(corpus_group("symmetric_4"));
  CHECK(s4.distinguishing_number == 4);
  CHECK(s4.minimum_degree == 2);
  CHECK(s4.order == 24);
  CHECK(s4.bound_ok);

  auto j = lemma1_check(pairs5());
  CHECK(j.distinguishing_number == 3);
  CHECK(j.minimum_degree == 6);
  CHECK(j.bound_ok);

  auto trivial = lemma1_check(PermGroup::trivial(3));
  CHECK(trivial.distinguishing_number == 1);
  CHECK(trivial.bound_ok);
}

TEST_CASE("per-element fixed-subset bound")
{
  for (auto const &entry : corpus()) {
    auto g = load_group(entry.text);
    if (g.order() > 100'000)
      continue;
    for (auto const &p : *g.elements()) {
      if (!p.is_identity())
        CHECK(cycle_count(p) <= g.degree() - (support_size(p) + 1) / 2);
    }
  }
}
