#ifndef DST_PARTITION_HPP
#define DST_PARTITION_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "dst/perm.hpp"

namespace dst
{

/// A partition of {0, ..., degree-1} into nonempty cells.
///
/// Cells are numbered by first occurrence, so two partitions with the same
/// cells compare equal regardless of how they were built.
class Partition
{
public:
  // Throws Error(BadParameters) if the cells overlap or miss a point.
  static Partition from_cells(std::size_t degree,
                              std::vector<std::vector<Point>> const &cells);

  // Any labelling works; labels are renumbered by first occurrence.
  static Partition from_labels(std::vector<std::size_t> const &labels);

  static Partition singletons(std::size_t degree);
  static Partition single_cell(std::size_t degree);

  std::size_t degree() const noexcept { return _cell_of.size(); }
  std::size_t cell_count() const noexcept { return _cell_count; }
  std::size_t cell_of(Point x) const noexcept { return _cell_of[x]; }
  std::vector<std::size_t> const &labels() const noexcept { return _cell_of; }

  // Cells in cell-index order, points ascending inside each cell.
  std::vector<std::vector<Point>> cells() const;

  friend bool operator==(Partition const &, Partition const &) = default;

private:
  Partition() = default;

  std::vector<std::size_t> _cell_of;
  std::size_t _cell_count = 0;
};

// "1 3 5; 2 4". Every point must be listed exactly once.
Partition parse_partition(std::string_view text, std::size_t degree);
std::string format_partition(Partition const &partition);

} // namespace dst

#endif // DST_PARTITION_HPP
