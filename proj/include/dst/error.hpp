#ifndef DST_ERROR_HPP
#define DST_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace dst
{

enum class ErrorKind
{
  MalformedCycle,
  PointOutOfRange,
  DuplicatePointInCycle,
  DegreeMismatch,
  EmptyGeneratorList,
  OrderExceedsCap,
  NotTransitive,
  EqualPoints,
  TrivialGroup,
  BadSubsetSize,
  SearchBudgetExceeded,
  NonIntegerAverage,
  BadParameters,
  NoEdges,
  EdgeOutOfRange,
  EdgeNotAnLSubset,
  PreconditionViolated,
  MalformedInput
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error
{
public:
  Error(ErrorKind kind, std::string const &what)
    : std::runtime_error(what), _kind(kind)
  {}

  ErrorKind kind() const noexcept { return _kind; }

private:
  ErrorKind _kind;
};

} // namespace dst

#endif // DST_ERROR_HPP
