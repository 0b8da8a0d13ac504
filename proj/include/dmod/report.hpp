#pragma once

// Reports behind the command-line tool: one JSON document and one text
// rendering per command. Rationals are serialized as "p/q" strings.

#include "dmod/verify.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dmod {

inline constexpr const char* kSchema = "dmod-curve/1";

struct ReportConfig {
  std::vector<int> generators{2, 3};
  Window window{-12, 12};
  int nMax = 60;
  std::vector<Rational> alphas{makeRational(1, 2), makeRational(1, 3), makeRational(2, 3)};
  bool json = false;
  std::uint64_t seed = 20240611;
  /// Wall-clock times make output run-dependent, so they are opt-in.
  bool timings = false;
};

struct Report {
  nlohmann::ordered_json json;
  std::string text;
  int exitCode = 0;
};

/// Parses "lo..hi".
Window parseWindow(const std::string& text);

Report semigroupReport(const ReportConfig& config);
/// Generators of D; with `op`, also the normal form and data of that operator.
Report operatorsReport(const ReportConfig& config, const std::optional<std::string>& op);
Report grdReport(const ReportConfig& config);
/// `ideal` holds generators separated by ';' (empty for I = 0).
Report hilbertReport(const ReportConfig& config, const std::string& ideal);
/// `alphas` may include 0 here.
Report simplesReport(const ReportConfig& config);
Report extTableReport(const ReportConfig& config);
struct IndecompRequest {
  std::string kind = "word";  // word | power
  std::string beta = "inf";
  Rational alpha = makeRational(1, 2);
  int n = 2;
};
Report indecompReport(const ReportConfig& config, const IndecompRequest& request);
/// Runs the acceptance criteria; exit code 1 when any fails.
Report verifyReport(const ReportConfig& config, const std::vector<int>& only = {});

}  // namespace dmod
