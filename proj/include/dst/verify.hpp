#ifndef DST_VERIFY_HPP
#define DST_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "dst/bounds.hpp"
#include "dst/distinguish.hpp"
#include "dst/graph.hpp"

namespace dst
{

struct VerifyConfig
{
  SearchBudget budget;
  AutomorphismBudget automorphism_budget;
  std::uint64_t main_scan = default_main_scan;
  std::uint64_t babai_scan = default_babai_scan;
};

enum class CheckStatus { Pass, Fail, Skipped };

struct CheckResult
{
  std::string id;
  std::string title;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
  double seconds = 0;
};

// The fixed list of desk-scale checks, in report order.
std::vector<std::string> verification_check_ids();

// Runs every check. Cap and budget exhaustion is reported as Skipped, not
// as a failure.
std::vector<CheckResult> run_verification(VerifyConfig const &config);

std::string to_string(CheckStatus status);

} // namespace dst

#endif // DST_VERIFY_HPP
