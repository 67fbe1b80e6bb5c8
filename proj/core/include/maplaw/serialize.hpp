#pragma once

#include "maplaw/audit.hpp"
#include "maplaw/harvest.hpp"
#include "maplaw/hyperplane.hpp"
#include "maplaw/lawcheck.hpp"
#include "maplaw/phenomena.hpp"
#include "maplaw/relation.hpp"

#include <string>
#include <vector>

namespace maplaw {

// All serializers emit deterministic bodies: stable key order, rationals
// as canonical "p/q" strings, trailing newline, no timestamps.

std::string read_text_file(const std::string& path);
void save_text_file(const std::string& path, const std::string& body);

// Mapping JSON: {"m": int, "n": int, "pairs": [[[x...],[y...]], ...]},
// plus "meta" when nonempty.
std::string mapping_to_json(const FiniteMapping& m);
FiniteMapping mapping_from_json_text(const std::string& text);

// Mapping CSV: header x1,...,xm,y1,...,yn; one pair per row.
std::string mapping_to_csv(const FiniteMapping& m);
FiniteMapping mapping_from_csv_text(const std::string& text);

// Dispatch on extension: .csv or .json.
FiniteMapping load_mapping_file(const std::string& path);

// Keys in order: verdict, method, witness, collisions.
std::string law1_report_to_json(const Law1Report& report);

std::string constraint_to_json(const EqualityConstraint& phi);
EqualityConstraint constraint_from_json_text(const std::string& text);
EqualityConstraint load_constraint_file(const std::string& path);

// {"pieces": [{"concept": [[...], ...], "level": "p/q"}, ...]}
std::string harvest_to_json(const HarvestFunction& h);
HarvestFunction harvest_from_json_text(const std::string& text);
HarvestFunction load_harvest_file(const std::string& path);

// {"groups": [{"name": ..., "points": [[...], ...]}, ...]}
std::vector<ConceptSet> groups_from_json_text(const std::string& text, Side side);
std::vector<ConceptSet> load_groups_file(const std::string& path, Side side);

std::string bundle_to_json(const HyperplaneBundle& bundle);
std::string separability_report_to_json(const SeparabilityReport& report);
std::string audit_report_to_json(const AuditReport& report);

std::string demo_report_to_json(const DemoReport& report);
// Plain-text narrative companion to the JSON body.
std::string demo_report_to_text(const DemoReport& report);

}  // namespace maplaw
