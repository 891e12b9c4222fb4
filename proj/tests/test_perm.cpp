#include <doctest.h>

#include <random>

#include "dst/error.hpp"
#include "dst/perm.hpp"
#include "oracles.hpp"

using namespace dst;

namespace
{

std::vector<Point> one_based(Permutation const &p)
{
  std::vector<Point> out;
  for (auto y : p.images())
    out.push_back(y + 1);
  return out;
}

ErrorKind parse_error(std::string_view text, std::size_t degree)
{
  try {
    parse_permutation(text, degree);
  } catch (Error const &e) {
    return e.kind();
  }
  FAIL("expected a parse error for " << text);
  return ErrorKind::MalformedInput;
}

} // namespace

TEST_CASE("parse_permutation reads cycle notation")
{
  CHECK(one_based(parse_permutation("(1 2 3)", 3)) == std::vector<Point>{2, 3, 1});
  CHECK(parse_permutation("()", 4) == Permutation(4));
  CHECK(one_based(parse_permutation("(1 2)(3 4)", 5)) == std::vector<Point>{2, 1, 4, 3, 5});
  CHECK(one_based(parse_permutation("  (1 2) (3 4)  ", 5)) ==
        std::vector<Point>{2, 1, 4, 3, 5});
  CHECK(parse_permutation("(3)", 4) == Permutation(4));
  CHECK(one_based(parse_permutation("(10 1)", 10))[9] == 1);
}

TEST_CASE("parse_permutation rejects bad input")
{
  CHECK(parse_error("", 3) == ErrorKind::MalformedCycle);
  CHECK(parse_error("(1 2", 3) == ErrorKind::MalformedCycle);
  CHECK(parse_error("1 2)", 3) == ErrorKind::MalformedCycle);
  CHECK(parse_error("(1,2)", 3) == ErrorKind::MalformedCycle);
  CHECK(parse_error("(a)", 3) == ErrorKind::MalformedCycle);
  CHECK(parse_error("()(1 2)", 3) == ErrorKind::MalformedCycle);
  CHECK(parse_error("(1 4)", 3) == ErrorKind::PointOutOfRange);
  CHECK(parse_error("(0 1)", 3) == ErrorKind::PointOutOfRange);
  CHECK(parse_error("(1 99999999999999999999)", 3) == ErrorKind::PointOutOfRange);
  CHECK(parse_error("(1 2 1)", 3) == ErrorKind::DuplicatePointInCycle);
  CHECK(parse_error("(1 2)(2 3)", 3) == ErrorKind::DuplicatePointInCycle);
}

TEST_CASE("error messages use 1-based points")
{
  try {
    parse_permutation("(1 2 2)", 3);
    FAIL("no error");
  } catch (Error const &e) {
    CHECK(std::string(e.what()).find("point 2") != std::string::npos);
  }
}

TEST_CASE("compose applies left to right")
{
  auto a = parse_permutation("(1 2)", 3);
  auto b = parse_permutation("(2 3)", 3);
  CHECK(compose(a, b) == parse_permutation("(1 3 2)", 3));
  CHECK(compose(Permutation(3), b) == b);
  CHECK_THROWS_AS(compose(a, Permutation(4)), Error);
  try {
    compose(a, Permutation(4));
  } catch (Error const &e) {
    CHECK(e.kind() == ErrorKind::DegreeMismatch);
  }
}

TEST_CASE("inverse")
{
  CHECK(inverse(parse_permutation("(1 2 3)", 3)) == parse_permutation("(1 3 2)", 3));
  CHECK(inverse(Permutation(5)) == Permutation(5));

  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    auto p = oracle::random_permutation(1 + i % 17, rng);
    CHECK(inverse(inverse(p)) == p);
    CHECK(compose(p, inverse(p)).is_identity());
    CHECK(compose(inverse(p), p).is_identity());
  }
}

TEST_CASE("support_size and cycle_count")
{
  CHECK(support_size(Permutation(6)) == 0);
  CHECK(support_size(parse_permutation("(2 5)", 6)) == 2);
  CHECK(support_size(parse_permutation("(1 2 3)(4 5)", 6)) == 5);

  CHECK(cycle_count(Permutation(7)) == 7);
  CHECK(cycle_count(parse_permutation("(1 2 3 4 5)", 5)) == 1);
  CHECK(cycle_count(parse_permutation("(1 2)(3 4)", 5)) == 3);
}

TEST_CASE("format_permutation is canonical")
{
  CHECK(format_permutation(Permutation(3)) == "()");
  CHECK(format_permutation(parse_permutation("(3 1 2)", 3)) == "(1 2 3)");
  CHECK(format_permutation(parse_permutation("(5 4)(2 3)", 5)) == "(2 3)(4 5)");
}

TEST_CASE("property: random permutations")
{
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = 1 + trial % 23;
    auto p = oracle::random_permutation(n, rng);
    auto q = oracle::random_permutation(n, rng);
    auto r = oracle::random_permutation(n, rng);

    CHECK(parse_permutation(format_permutation(p), n) == p);
    CHECK(compose(compose(p, q), r) == compose(p, compose(q, r)));

    std::size_t nontrivial = cycles(p).size();
    CHECK(cycle_count(p) == n - support_size(p) + nontrivial);
    if (!p.is_identity())
      CHECK(cycle_count(p) <= n - (support_size(p) + 1) / 2);

    for (Point x = 0; x < n; ++x)
      CHECK(compose(p, q)[x] == q[p[x]]);
  }
}

TEST_CASE("from_images validates bijections")
{
  CHECK_THROWS_AS(Permutation::from_images({0, 0, 1}), Error);
  CHECK_THROWS_AS(Permutation::from_images({0, 3, 1}), Error);
  CHECK(Permutation::from_images({1, 2, 0}) == parse_permutation("(1 2 3)", 3));
}
