#include "dst/error.hpp"

namespace dst
{

std::string_view to_string(ErrorKind kind)
{
  switch (kind) {
    case ErrorKind::MalformedCycle: return "MalformedCycle";
    case ErrorKind::PointOutOfRange: return "PointOutOfRange";
    case ErrorKind::DuplicatePointInCycle: return "DuplicatePointInCycle";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::EmptyGeneratorList: return "EmptyGeneratorList";
    case ErrorKind::OrderExceedsCap: return "OrderExceedsCap";
    case ErrorKind::NotTransitive: return "NotTransitive";
    case ErrorKind::EqualPoints: return "EqualPoints";
    case ErrorKind::TrivialGroup: return "TrivialGroup";
    case ErrorKind::BadSubsetSize: return "BadSubsetSize";
    case ErrorKind::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorKind::NonIntegerAverage: return "NonIntegerAverage";
    case ErrorKind::BadParameters: return "BadParameters";
    case ErrorKind::NoEdges: return "NoEdges";
    case ErrorKind::EdgeOutOfRange: return "EdgeOutOfRange";
    case ErrorKind::EdgeNotAnLSubset: return "EdgeNotAnLSubset";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::MalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

} // namespace dst
