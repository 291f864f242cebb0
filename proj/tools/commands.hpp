#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace cuspcheck {

enum Exit : int {
  kPass = 0,
  kCriterionFail = 1,
  kParse = 2,
  kValidation = 3,
  kGenus = 4,
  kSurgery = 5,
};

enum class Format { Text, Csv, Json };

/// One command's output in all three formats plus its exit code.
struct Report {
  nlohmann::ordered_json json;
  std::string text;
  std::string csv;
  int exit_code = kPass;

  const std::string& render(Format f, std::string& scratch) const;
};

/// Raised for anything that maps to a non-zero exit before a report exists.
struct CommandError {
  int exit_code;
  std::string message;
};

Report cmd_knot(const std::string& spec);

struct CheckRequest {
  long degree = 0;
  std::vector<std::string> cusps;
  /// Empty means every criterion that applies.
  std::vector<std::string> criteria;
};
Report cmd_check(const CheckRequest& req);

Report cmd_enumerate(long degree, std::size_t max_terms);

struct DinvRequest {
  std::vector<std::string> cusps;
  long surgery = 0;
  /// "all", "extendable:D", or an integer label.
  std::string spinc = "all";
};
Report cmd_dinv(const DinvRequest& req);

struct SurveyRequest {
  std::string range;
  std::string mode = "single-cusp";
  unsigned workers = 0;
  std::size_t max_terms = 4;
  bool long_ok = false;
  bool progress = false;
};
Report cmd_survey(const SurveyRequest& req);

/// Surveys whose estimated candidate count exceeds this need --long-ok.
inline constexpr long kLongRunThreshold = 500'000;

/// Worker count from the flag if given, else from CUSPIDAL_WORKERS, else 0
/// (all hardware threads). Throws CommandError on a malformed value.
unsigned resolve_workers(std::optional<unsigned> flag);

}  // namespace cuspcheck
