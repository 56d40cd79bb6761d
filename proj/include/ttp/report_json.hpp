#pragma once

#include <json.hpp>

#include "ttp/conjecture.hpp"
#include "ttp/positivity.hpp"
#include "ttp/spectral.hpp"

namespace ttp {

// Schema version stamped into every top-level report.
inline constexpr int kReportSchemaVersion = 1;

nlohmann::json to_json(const TpReport& report);
nlohmann::json to_json(const TtpReport& report);
nlohmann::json to_json(const PMatrixReport& report);
nlohmann::json to_json(const HypothesisReport& report);
nlohmann::json to_json(const SpectralSummary& summary);
nlohmann::json to_json(const VerdictSummary& summary);
nlohmann::json to_json(const BatchReport& report);

/// Result of `check`: verdict plus the full hypothesis report.
struct CheckReport {
  bool verdict = false;
  bool augmented = false;
  std::string mode;
  bool ttp = false;
  std::vector<std::string> failing_paths;
  std::optional<MinorWitness> witness;
  std::vector<std::pair<int, bool>> pendants;
  std::optional<std::pair<int, MinorWitness>> pendant_witness;

  friend bool operator==(const CheckReport& a, const CheckReport& b);
};

CheckReport make_check_report(const HypothesisReport& report, bool augmented, TpMode mode);
nlohmann::json to_json(const CheckReport& report);

// Parsers throw ParseError on schema violations.
CheckReport check_report_from_json(const nlohmann::json& j);
VerdictSummary verdict_summary_from_json(const nlohmann::json& j);
BatchReport batch_report_from_json(const nlohmann::json& j);

}  // namespace ttp
