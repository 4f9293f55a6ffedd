#pragma once

#include "uifs/config.hpp"
#include "uifs/verdict.hpp"

#include <json.hpp>

#include <string>

namespace uifs {

nlohmann::json report_to_json(const VerificationReport& report);
VerificationReport report_from_json(const nlohmann::json& doc);

// Human-readable rendering of the same content.
std::string report_to_text(const VerificationReport& report);

// Line-model reports carry margins instead of word certificates.
nlohmann::json line_report_to_json(const line::ScStarLineResult& result);
line::ScStarLineResult line_report_from_json(const nlohmann::json& doc);
std::string line_report_to_text(const line::ScStarLineResult& result);

// Recomputes the constant-c procedure for the config and compares.
bool replay_line_report(const LineConfig& config, const line::ScStarLineResult& result);

// Re-verifies an emitted report against the library: ball-covering
// certificates are replayed word by word through the composition images;
// model reports are recomputed and compared. Returns false on any mismatch.
bool replay_report(const RunConfig& config, const VerificationReport& report,
                   const Budget& budget = {});

} // namespace uifs
