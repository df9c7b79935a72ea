#pragma once

// Text, JSON and CSV renderings of class tables, verification reports and
// identity summaries. All output is deterministic for fixed input.

#include "ppart/verifier.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace ppart {

enum class OutputFormat { text, json, csv };

/// Throws ConfigError.
OutputFormat parse_output_format(const std::string& name);

nlohmann::ordered_json report_to_json(const VerificationReport& r);

/// Quotes a CSV field when it contains a comma, quote or newline.
std::string csv_field(const std::string& s);

std::string format_classes(const RootSystem& rs, const std::vector<UnipotentClass>& classes, OutputFormat fmt);
std::string format_reports(const std::vector<VerificationReport>& reports, OutputFormat fmt);
std::string format_identities(const std::vector<IdentitySummary>& summaries, OutputFormat fmt);

} // namespace ppart
