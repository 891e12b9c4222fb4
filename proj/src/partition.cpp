#include "dst/partition.hpp"

#include <sstream>

#include "dst/error.hpp"

namespace dst
{

Partition Partition::from_labels(std::vector<std::size_t> const &labels)
{
  Partition p;
  p._cell_of.resize(labels.size());

  std::vector<std::size_t> renumber;
  std::vector<std::size_t> seen_labels;
  for (std::size_t x = 0; x < labels.size(); ++x) {
    std::size_t cell = seen_labels.size();
    for (std::size_t i = 0; i < seen_labels.size(); ++i) {
      if (seen_labels[i] == labels[x]) {
        cell = i;
        break;
      }
    }
    if (cell == seen_labels.size())
      seen_labels.push_back(labels[x]);
    p._cell_of[x] = cell;
  }
  p._cell_count = seen_labels.size();
  return p;
}

Partition Partition::from_cells(std::size_t degree,
                                std::vector<std::vector<Point>> const &cells)
{
  constexpr auto unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> labels(degree, unset);
  for (std::size_t c = 0; c < cells.size(); ++c) {
    if (cells[c].empty())
      throw Error(ErrorKind::BadParameters, "empty cell in partition");
    for (Point x : cells[c]) {
      if (x >= degree)
        throw Error(ErrorKind::PointOutOfRange,
                    "point " + std::to_string(x + 1) + " outside [1, " +
                      std::to_string(degree) + "]");
      if (labels[x] != unset)
        throw Error(ErrorKind::BadParameters,
                    "point " + std::to_string(x + 1) + " listed in two cells");
      labels[x] = c;
    }
  }
  for (std::size_t x = 0; x < degree; ++x) {
    if (labels[x] == unset)
      throw Error(ErrorKind::BadParameters,
                  "point " + std::to_string(x + 1) + " not listed in any cell");
  }
  return from_labels(labels);
}

Partition Partition::singletons(std::size_t degree)
{
  std::vector<std::size_t> labels(degree);
  for (std::size_t x = 0; x < degree; ++x)
    labels[x] = x;
  return from_labels(labels);
}

Partition Partition::single_cell(std::size_t degree)
{
  return from_labels(std::vector<std::size_t>(degree, 0));
}

std::vector<std::vector<Point>> Partition::cells() const
{
  std::vector<std::vector<Point>> result(_cell_count);
  for (Point x = 0; x < _cell_of.size(); ++x)
    result[_cell_of[x]].push_back(x);
  return result;
}

Partition parse_partition(std::string_view text, std::size_t degree)
{
  std::vector<std::vector<Point>> cells;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(';', start);
    if (end == std::string_view::npos)
      end = text.size();

    std::istringstream is{std::string(text.substr(start, end - start))};
    std::vector<Point> cell;
    std::string token;
    while (is >> token) {
      std::size_t used = 0;
      unsigned long value = 0;
      try {
        value = std::stoul(token, &used);
      } catch (std::exception const &) {
        used = 0;
      }
      if (used != token.size() || token.empty() || token[0] == '-' ||
          token[0] == '+')
        throw Error(ErrorKind::MalformedInput,
                    "bad point \"" + token + "\" in partition");
      if (value < 1 || value > degree)
        throw Error(ErrorKind::PointOutOfRange,
                    "point " + token + " outside [1, " + std::to_string(degree) + "]");
      cell.push_back(static_cast<Point>(value - 1));
    }
    if (cell.empty())
      throw Error(ErrorKind::MalformedInput, "empty cell in partition text");
    cells.push_back(std::move(cell));
    start = end + 1;
  }
  return Partition::from_cells(degree, cells);
}

std::string format_partition(Partition const &partition)
{
  std::ostringstream os;
  auto cs = partition.cells();
  for (std::size_t c = 0; c < cs.size(); ++c) {
    if (c)
      os << "; ";
    for (std::size_t i = 0; i < cs[c].size(); ++i)
      os << (i ? " " : "") << cs[c][i] + 1;
  }
  return os.str();
}

} // namespace dst
