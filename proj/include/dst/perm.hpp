#ifndef DST_PERM_HPP
#define DST_PERM_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dst
{

// Points are 0-based throughout the C++ API. Text formats and error messages
// are 1-based.
using Point = std::uint32_t;

/**
 * A bijection on {0, ..., degree-1} stored as an image table.
 *
 * Products are applied left to right: (p * q)(x) = q(p(x)), matching the
 * right action x^g used for permutation groups.
 */
class Permutation
{
public:
  explicit Permutation(std::size_t degree = 1);

  // Throws Error(PointOutOfRange / DuplicatePointInCycle) if `images` is not
  // a bijection.
  static Permutation from_images(std::vector<Point> images);

  std::size_t degree() const noexcept { return _images.size(); }
  Point operator[](Point x) const noexcept { return _images[x]; }
  std::span<Point const> images() const noexcept { return _images; }

  bool is_identity() const noexcept;

  Permutation operator*(Permutation const &rhs) const;
  Permutation &operator*=(Permutation const &rhs);

  friend bool operator==(Permutation const &, Permutation const &) = default;
  friend std::strong_ordering operator<=>(Permutation const &lhs,
                                          Permutation const &rhs) = default;

private:
  struct unchecked_tag {};
  Permutation(std::vector<Point> images, unchecked_tag)
    : _images(std::move(images))
  {}

  friend Permutation compose(Permutation const &, Permutation const &);
  friend Permutation inverse(Permutation const &);

  std::vector<Point> _images;
};

// x -> q(p(x)). Throws Error(DegreeMismatch).
Permutation compose(Permutation const &p, Permutation const &q);
Permutation inverse(Permutation const &p);

std::size_t support_size(Permutation const &p);

// Number of cycles, fixed points included.
std::size_t cycle_count(Permutation const &p);

// Nontrivial cycles in canonical order: each starts at its smallest point and
// cycles are sorted by that point.
std::vector<std::vector<Point>> cycles(Permutation const &p);

Permutation parse_permutation(std::string_view text, std::size_t degree);

// Canonical cycle notation, "()" for the identity.
std::string format_permutation(Permutation const &p);

std::ostream &operator<<(std::ostream &os, Permutation const &p);

} // namespace dst

template<>
struct std::hash<dst::Permutation>
{
  std::size_t operator()(dst::Permutation const &p) const noexcept;
};

#endif // DST_PERM_HPP
