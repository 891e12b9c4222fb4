#include "dst/perm.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

#include "dst/error.hpp"

namespace dst
{

Permutation::Permutation(std::size_t degree)
  : _images(degree)
{
  std::iota(_images.begin(), _images.end(), Point{0});
}

Permutation Permutation::from_images(std::vector<Point> images)
{
  std::vector<bool> seen(images.size(), false);
  for (Point y : images) {
    if (y >= images.size())
      throw Error(ErrorKind::PointOutOfRange,
                  "image " + std::to_string(y + 1) + " exceeds degree " +
                    std::to_string(images.size()));
    if (seen[y])
      throw Error(ErrorKind::DuplicatePointInCycle,
                  "image " + std::to_string(y + 1) + " occurs twice");
    seen[y] = true;
  }
  return Permutation(std::move(images), unchecked_tag{});
}

bool Permutation::is_identity() const noexcept
{
  for (Point x = 0; x < _images.size(); ++x)
    if (_images[x] != x)
      return false;
  return true;
}

Permutation Permutation::operator*(Permutation const &rhs) const
{
  return compose(*this, rhs);
}

Permutation &Permutation::operator*=(Permutation const &rhs)
{
  if (degree() != rhs.degree())
    throw Error(ErrorKind::DegreeMismatch, "cannot compose permutations of degree " +
                  std::to_string(degree()) + " and " + std::to_string(rhs.degree()));
  for (auto &y : _images)
    y = rhs._images[y];
  return *this;
}

Permutation compose(Permutation const &p, Permutation const &q)
{
  Permutation result(p);
  result *= q;
  return result;
}

Permutation inverse(Permutation const &p)
{
  std::vector<Point> inv(p.degree());
  for (Point x = 0; x < p.degree(); ++x)
    inv[p[x]] = x;
  return Permutation(std::move(inv), Permutation::unchecked_tag{});
}

std::size_t support_size(Permutation const &p)
{
  std::size_t moved = 0;
  for (Point x = 0; x < p.degree(); ++x)
    moved += p[x] != x;
  return moved;
}

std::size_t cycle_count(Permutation const &p)
{
  std::vector<bool> seen(p.degree(), false);
  std::size_t count = 0;
  for (Point x = 0; x < p.degree(); ++x) {
    if (seen[x])
      continue;
    ++count;
    for (Point y = x; !seen[y]; y = p[y])
      seen[y] = true;
  }
  return count;
}

std::vector<std::vector<Point>> cycles(Permutation const &p)
{
  std::vector<std::vector<Point>> result;
  std::vector<bool> seen(p.degree(), false);
  for (Point x = 0; x < p.degree(); ++x) {
    if (seen[x] || p[x] == x)
      continue;
    auto &cycle = result.emplace_back();
    for (Point y = x; !seen[y]; y = p[y]) {
      seen[y] = true;
      cycle.push_back(y);
    }
  }
  return result;
}

namespace
{

class CycleParser
{
public:
  CycleParser(std::string_view text, std::size_t degree)
    : _text(text), _degree(degree)
  {}

  Permutation parse()
  {
    std::vector<Point> images(_degree);
    std::iota(images.begin(), images.end(), Point{0});
    std::vector<bool> used(_degree, false);

    skip_ws();
    if (at_end())
      fail("empty permutation");

    std::size_t cycle_total = 0;
    bool saw_empty = false;
    while (!at_end()) {
      expect('(');
      skip_ws();
      if (peek() == ')') {
        ++_pos;
        saw_empty = true;
      } else {
        std::vector<Point> cycle;
        while (peek() != ')') {
          Point x = parse_point();
          if (used[x])
            throw Error(ErrorKind::DuplicatePointInCycle,
                        "point " + std::to_string(x + 1) + " repeated at column " +
                          std::to_string(_pos));
          used[x] = true;
          cycle.push_back(x);
          std::size_t before = _pos;
          skip_ws();
          if (peek() != ')' && _pos == before)
            fail("expected whitespace or ')'");
        }
        ++_pos;
        for (std::size_t i = 0; i < cycle.size(); ++i)
          images[cycle[i]] = cycle[(i + 1) % cycle.size()];
      }
      ++cycle_total;
      skip_ws();
    }

    if (saw_empty && cycle_total != 1)
      fail("\"()\" must stand alone");

    return Permutation::from_images(std::move(images));
  }

private:
  bool at_end() const { return _pos >= _text.size(); }
  char peek() const { return at_end() ? '\0' : _text[_pos]; }

  void skip_ws()
  {
    while (!at_end() && std::isspace(static_cast<unsigned char>(_text[_pos])))
      ++_pos;
  }

  void expect(char c)
  {
    if (peek() != c)
      fail(std::string("expected '") + c + "'");
    ++_pos;
  }

  Point parse_point()
  {
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      fail("expected a point");
    std::uint64_t value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + static_cast<std::uint64_t>(peek() - '0');
      if (value > _degree + 1)
        value = _degree + 1;
      ++_pos;
    }
    if (value < 1 || value > _degree)
      throw Error(ErrorKind::PointOutOfRange,
                  "point " + (value > _degree ? "> " + std::to_string(_degree)
                                              : std::to_string(value)) +
                    " outside [1, " + std::to_string(_degree) + "]");
    return static_cast<Point>(value - 1);
  }

  [[noreturn]] void fail(std::string const &msg) const
  {
    throw Error(ErrorKind::MalformedCycle,
                msg + " at column " + std::to_string(_pos + 1) + " in \"" +
                  std::string(_text) + "\"");
  }

  std::string_view _text;
  std::size_t _degree;
  std::size_t _pos = 0;
};

} // namespace

Permutation parse_permutation(std::string_view text, std::size_t degree)
{
  if (degree == 0)
    throw Error(ErrorKind::PointOutOfRange, "degree must be positive");
  return CycleParser(text, degree).parse();
}

std::string format_permutation(Permutation const &p)
{
  auto cs = cycles(p);
  if (cs.empty())
    return "()";

  std::ostringstream os;
  for (auto const &cycle : cs) {
    os << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i)
      os << (i ? " " : "") << cycle[i] + 1;
    os << ')';
  }
  return os.str();
}

std::ostream &operator<<(std::ostream &os, Permutation const &p)
{
  return os << format_permutation(p);
}

} // namespace dst

std::size_t std::hash<dst::Permutation>::operator()(
  dst::Permutation const &p) const noexcept
{
  std::size_t seed = p.degree();
  for (auto y : p.images())
    seed ^= y + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  return seed;
}
