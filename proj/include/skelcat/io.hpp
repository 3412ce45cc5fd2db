#pragma once

#include <json.hpp>

#include <map>
#include <optional>
#include <string>

#include "skelcat/condense.hpp"

namespace skelcat {

using Json = nlohmann::ordered_json;

// Exact values serialize as {"order": n, "num": [...], "den": [...]} over the
// reduced power basis; roots of unity may be abbreviated {"zeta": [n, k]}.
// Output is canonical: conductor-minimal order, zeta form exactly for
// non-rational roots of unity, components as integers when they fit in 2^53
// and as decimal strings otherwise.
Json cyclo_to_json(const CycloNum& x);
CycloNum cyclo_from_json(const Json& j);

Json spec_to_json(const CategorySpec& spec);
CategorySpec spec_from_json(const Json& j);

/// Wraps a category in a schema-versioned exchange document.
Json document_from_spec(const CategorySpec& spec);

struct TannakianHints {
    std::optional<std::vector<std::string>> labels;
    std::optional<Json> group;  // inline group object, same schema as group files
    std::map<std::string, std::size_t> cocycle_overrides;  // orbit rep name -> class id
};

struct ExchangeDocument {
    CategorySpec category;
    TannakianHints hints;
};

ExchangeDocument document_from_json(const Json& j);

/// Group file: {"order": n, "table": [[...]], optional "characters":
/// {"classes": [...], "chars": [[...]]}, optional "label_to_irrep": {name: i}}.
struct GroupFile {
    FiniteGroup group;
    std::optional<CharacterTable> characters;
    std::map<std::string, std::size_t> label_to_irrep;
};

GroupFile group_from_json(const Json& j);
Json group_to_json(const FiniteGroup& g);

Json orbit_report_to_json(const CategorySpec& original, const OrbitReport& report);

/// Full condensation document: condensed category, the decomposition matrix
/// phi as (eta, x, multiplicity) triples by name, and the orbit report.
Json condensation_to_json(const CategorySpec& original, const CondensationResult& result,
                          const CheckReport& checks);

Json validation_to_json(const FusionRing& ring, const ValidationReport& rep);

/// Reads a whole file; throws ParseError on IO or JSON failure.
Json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

std::string format_double(double v);

}  // namespace skelcat
