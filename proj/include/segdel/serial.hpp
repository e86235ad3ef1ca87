// JSON/CSV serialization. Emission is bit-stable: object keys are sorted and
// repeated runs of the same configuration produce identical bytes.
#ifndef SEGDEL_SERIAL_HPP
#define SEGDEL_SERIAL_HPP

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "segdel/channel.hpp"
#include "segdel/codebook.hpp"
#include "segdel/labeling.hpp"
#include "segdel/redundancy.hpp"
#include "segdel/word.hpp"

namespace segdel {

using json = nlohmann::json;

json to_json(const ChannelParams& p);
ChannelParams params_from_json(const json& j);

json to_json(const LabelingScheme& s);
LabelingScheme scheme_from_json(const json& j);

json to_json(const SyndromeTuple& t);
SyndromeTuple tuple_from_json(const json& j);

/// Array of "none" | {"burst": a} entries.
json to_json(const ErrorPattern& p);
ErrorPattern pattern_from_json(const json& j);

json to_json(const Word& w);

/// Versioned codebook file: header plus per-branch tuple + codeword lists.
json to_json(const Codebook& book);
/// Re-validates every invariant on load; throws on any violation.
Codebook codebook_from_json(const json& j);

json to_json(const CertificationReport& rep);
json to_json(const RedundancyReport& rep);

/// Comparison table as CSV rows (header + one row per formula).
std::vector<std::vector<std::string>> comparison_csv(const std::vector<ComparisonRow>& rows);

/// Writes a JSON document ("json") or a row table ("csv"); any other format
/// is a parameter error.
void emit(const json& doc, const std::string& format, const std::filesystem::path& path);
void emit(const std::vector<std::vector<std::string>>& rows, const std::string& format,
          const std::filesystem::path& path);

/// Stable text form used for every emitted JSON document.
std::string stable_dump(const json& doc);

/// Fixed numeric formatting for CSV cells.
std::string format_double(double v);

}  // namespace segdel

#endif
