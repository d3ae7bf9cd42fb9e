#ifndef LDPC_IO_HPP
#define LDPC_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "ldpc/bisection.hpp"
#include "ldpc/bounds.hpp"
#include "ldpc/config_model.hpp"
#include "ldpc/degree_model.hpp"
#include "ldpc/experiments.hpp"

namespace ldpc {

// Stable key order keeps output files byte-identical run to run.
using Json = nlohmann::ordered_json;

// Parses text as JSON; malformed input raises ldpc::Error (a validation
// failure, not an internal one).
Json parse_json(const std::string& text);
Json load_json_file(const std::string& path);

// Degree sequence schema: {"lambda": [...], "rho": [...]} or the regular
// shorthand {"n": N, "dv": DV, "dc": DC}.
DegreeSequence degree_sequence_from_json(const Json& j);
// A family is either a single sequence object or an array of them.
std::vector<DegreeSequence> degree_sequence_family_from_json(const Json& j);

// Multigraph schema: {"n": ..., "m": ..., "edges": [[left, right, mult], ...]}.
Multigraph multigraph_from_json(const Json& j);
Json to_json(const Multigraph& graph);

Json to_json(const Rational& r);
Json to_json(const EnsembleStats& stats);

// Assignment bitstring packed into hex: nibble k holds vertices 4k..4k+3,
// vertex 4k in the least significant bit.
std::string side_hex(const std::vector<std::uint8_t>& side);
Json to_json(const BisectionResult& result);

Json to_json(const EnumerationReport& report);
Json to_json(const BoundReport& report);
Json to_json(const GapScalingReport& report);
Json to_json(const TrialRecord& rec);
Json to_json(const TrendSummary& sum);

// Shortest round-trip decimal form, locale independent.
std::string format_double(double value);

// RFC 4180 quoting; LF line endings.
std::string csv_field(const std::string& raw);
std::string trial_records_csv(const std::vector<TrialRecord>& records);
std::string gap_reports_csv(const std::vector<GapScalingReport>& reports);

}  // namespace ldpc

#endif
