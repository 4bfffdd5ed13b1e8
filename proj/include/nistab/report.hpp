#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "nistab/verdict.hpp"

namespace nistab {

using Json = nlohmann::json;

// Parsed problem file: the two systems, analysis options, and optional
// caller-supplied endpoint multipliers.
struct SystemFile {
  TransferMatrix g{1, 1};
  TransferMatrix gbar{1, 1};
  AnalysisOptions options;
  std::optional<CMat> user_pi0;
  std::optional<CMat> user_pi_inf;
  Json raw;

  bool has_user_multipliers() const { return user_pi0.has_value(); }
};

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

// Throws SchemaError naming the offending JSON path on any shape problem.
SystemFile parse_system_file(const Json& j);
SystemFile load_system_file(const std::string& path);

Json matrix_to_json(const CMat& m);
CMat matrix_from_json(const Json& j, const std::string& where);

Json system_to_json(const TransferMatrix& m);
TransferMatrix system_from_json(const Json& j, const std::string& where);

Json classification_to_json(const NIClassification& c);

// Full report document: tool stamp, the embedded input, both
// classifications, the verdict with its certificate, and every quantity the
// replay check needs (endpoint matrices, multipliers, tau-grid, scan grid).
Json certificate_to_json(const StabilityCertificate& cert,
                         const SystemFile& input);

struct ReplayResult {
  bool ok = false;
  double max_margin_deviation = 0;
  std::vector<std::string> mismatches;
};

// Recomputes the endpoint checks and the band scan of a stored report from
// its own embedded systems, multipliers, tau-grid and scan grid, and demands
// the margins agree with the stored ones to 1e-12 (relative).
ReplayResult replay_verify(const Json& report);

}
