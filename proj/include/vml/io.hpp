#pragma once

// JSON documents: {"format_version":1, "type":..., payload fields...}.

#include <string>
#include <vector>

#include <json.hpp>

#include "vml/bimatroid.hpp"
#include "vml/lorentzian.hpp"
#include "vml/sequences.hpp"

namespace vml {

using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

/// Parses JSON text; malformed text raises InputError.
Json parse_json(const std::string& text);
/// Reads a file, or stdin for "-".
Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& doc);
/// Two-space indented text with a trailing newline.
std::string dump_document(const Json& doc);

/// Checks the envelope and returns the type field.
std::string document_type(const Json& doc);

/// INT when integral, otherwise "p/s".
Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

/// INT, "inf", or a decimal string for relaxed reals.
Json ext_val_to_json(const ExtVal& v);
ExtVal ext_val_from_json(const Json& j);

Json subset_to_json(const GroundSet& ground, Subset s);
Subset subset_from_json(const GroundSet& ground, const Json& j);

Json to_json(const PlueckerVector& p);
Json to_json(const MConvexMap& f);
Json to_json(const MinorMap& mu);
Json to_json(const MultiHomPoly& poly);
Json to_json(const PositiveSequence& seq);

PlueckerVector pluecker_from_json(const Json& doc);
MConvexMap mconvex_from_json(const Json& doc);
MinorMap bimatroid_from_json(const Json& doc);
MultiHomPoly polynomial_from_json(const Json& doc);
PositiveSequence sequence_from_json(const Json& doc);

/// How witness sets and elements are labelled: sets[i] against set_grounds[i]
/// (the last entry repeats), elements against element_ground.
struct WitnessLabels {
  std::vector<const GroundSet*> set_grounds;
  const GroundSet* element_ground = nullptr;
};

/// {"pass":..., "axiom":..., "message":..., "witness":{...}}.
Json check_report_to_json(const CheckReport& report, const WitnessLabels& labels);

}  // namespace vml
