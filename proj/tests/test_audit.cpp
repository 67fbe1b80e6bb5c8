#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "maplaw/audit.hpp"

#include "test_support.hpp"

#include <string>
#include <vector>

using namespace maplaw;
using test_support::rat;

namespace {

HypothesisSpec clean_spec() {
  HypothesisSpec spec;
  spec.name = "pixels-to-levels";
  spec.domain.dims = 2;
  spec.domain.bounds = {{Rational(0), Rational(255)}, {Rational(0), Rational(255)}};
  spec.range.dims = 1;
  spec.range.structure = "levels";
  ProvenanceTag obs;
  obs.kind = SourceKind::observation_from_domain;
  obs.detail = "raw frames";
  spec.sources = {obs};
  return spec;
}

ProvenanceTag tag_of(SourceKind kind) {
  ProvenanceTag tag;
  tag.kind = kind;
  return tag;
}

}  // namespace

TEST_CASE("kind names round-trip and unknown kinds are rejected") {
  const std::vector<SourceKind> kinds = {
      SourceKind::observation_from_domain, SourceKind::indicator_set,
      SourceKind::dataset_statistic,       SourceKind::external_model_output,
      SourceKind::human_label_feed,        SourceKind::external_dictionary,
      SourceKind::test_criterion,
  };
  for (SourceKind kind : kinds) {
    CHECK(kind_from_name(kind_name(kind)) == kind);
  }
  CHECK(std::string(kind_name(SourceKind::indicator_set)) == "indicator-set");
  CHECK_RAISES(unknown_provenance_kind, kind_from_name("oracle"));
  CHECK_RAISES(unknown_provenance_kind, kind_from_name(""));

  CHECK(stage_from_name("construction") == UseStage::construction);
  CHECK(stage_from_name("reporting") == UseStage::reporting);
  CHECK_RAISES(parse_error, stage_from_name("deployment"));
}

TEST_CASE("an observation-only spec is a learning candidate") {
  AuditReport report = audit_spec(clean_spec());
  CHECK(report.verdict == AuditVerdict::learning_candidate);
  CHECK(report.violations.empty());
  CHECK(report.warnings.empty());
  CHECK(report.spec_name == "pixels-to-levels");
}

TEST_CASE("each banned source kind trips exactly its own rule") {
  struct Expectation {
    SourceKind kind;
    const char* rule;
  };
  const std::vector<Expectation> table = {
      {SourceKind::indicator_set, "LAW2-INDICATOR"},
      {SourceKind::external_dictionary, "LAW2-DICTIONARY"},
      {SourceKind::test_criterion, "LAW2-TEST-CRITERION"},
      {SourceKind::human_label_feed, "LAW2-HUMAN-LABEL"},
      {SourceKind::external_model_output, "LAW2-EXTERNAL-MODEL"},
  };
  for (const Expectation& expected : table) {
    CAPTURE(expected.rule);
    HypothesisSpec spec = clean_spec();
    spec.sources.push_back(tag_of(expected.kind));
    AuditReport report = audit_spec(spec);
    CHECK(report.verdict == AuditVerdict::non_learning);
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].rule == expected.rule);
    CHECK(report.violations[0].source_index == 1);
  }
}

TEST_CASE("dataset statistics are staged: construction trips, reporting passes") {
  HypothesisSpec spec = clean_spec();
  ProvenanceTag stat = tag_of(SourceKind::dataset_statistic);
  stat.stage = UseStage::construction;
  spec.sources.push_back(stat);
  AuditReport building = audit_spec(spec);
  CHECK(building.verdict == AuditVerdict::non_learning);
  REQUIRE(building.violations.size() == 1);
  CHECK(building.violations[0].rule == "LAW2-DATASET-STAT");

  spec.sources.back().stage = UseStage::reporting;
  AuditReport reporting = audit_spec(spec);
  CHECK(reporting.verdict == AuditVerdict::learning_candidate);
  CHECK(reporting.violations.empty());
}

TEST_CASE("the memory-system attestation downgrades the model-output ban") {
  HypothesisSpec spec = clean_spec();
  ProvenanceTag feed = tag_of(SourceKind::external_model_output);
  feed.producer_is_memory_system = true;
  spec.sources.push_back(feed);
  AuditReport report = audit_spec(spec);
  CHECK(report.verdict == AuditVerdict::learning_candidate);
  CHECK(report.violations.empty());
  REQUIRE(report.warnings.size() == 1);
  CHECK(report.warnings[0].rule == "WARN-MEMORY-PRODUCER");
  CHECK(report.warnings[0].source_index == 1);
}

TEST_CASE("width-zero domain bounds only warn") {
  HypothesisSpec spec = clean_spec();
  spec.domain.bounds[1] = {Rational(7), Rational(7)};
  AuditReport report = audit_spec(spec);
  CHECK(report.verdict == AuditVerdict::learning_candidate);
  REQUIRE(report.warnings.size() == 1);
  CHECK(report.warnings[0].rule == "WARN-NARROW-RANGE");
  CHECK_FALSE(report.warnings[0].source_index.has_value());
}

TEST_CASE("the verdict is non-learning exactly when violations exist") {
  // Stack several sources; every violating tag appears, indexed correctly.
  HypothesisSpec spec = clean_spec();
  spec.sources.push_back(tag_of(SourceKind::indicator_set));
  spec.sources.push_back(tag_of(SourceKind::observation_from_domain));
  spec.sources.push_back(tag_of(SourceKind::external_dictionary));
  AuditReport report = audit_spec(spec);
  CHECK(report.verdict == AuditVerdict::non_learning);
  REQUIRE(report.violations.size() == 2);
  CHECK(report.violations[0].rule == "LAW2-INDICATOR");
  CHECK(report.violations[0].source_index == 1);
  CHECK(report.violations[1].rule == "LAW2-DICTIONARY");
  CHECK(report.violations[1].source_index == 3);
}

TEST_CASE("audits are deterministic functions of the spec") {
  HypothesisSpec spec = clean_spec();
  spec.sources.push_back(tag_of(SourceKind::indicator_set));
  AuditReport first = audit_spec(spec);
  AuditReport second = audit_spec(spec);
  CHECK(first.verdict == second.verdict);
  REQUIRE(first.violations.size() == second.violations.size());
  for (std::size_t i = 0; i < first.violations.size(); ++i) {
    CHECK(first.violations[i].rule == second.violations[i].rule);
    CHECK(first.violations[i].explanation == second.violations[i].explanation);
  }
}

TEST_CASE("TOML and JSON spellings of one spec audit identically") {
  const std::string toml_text = R"(name = "paired-spec"
notes = "two spellings"

[domain]
dims = 1
bounds = [["0", "10"]]

[range]
dims = 1
structure = "levels"

[[sources]]
kind = "observation-from-domain"
detail = "sensor"

[[sources]]
kind = "indicator-set"
detail = "cup vs dog"
cardinality = 2
)";
  const std::string json_text = R"({
  "name": "paired-spec",
  "notes": "two spellings",
  "domain": {"dims": 1, "bounds": [["0", "10"]]},
  "range": {"dims": 1, "structure": "levels"},
  "sources": [
    {"kind": "observation-from-domain", "detail": "sensor"},
    {"kind": "indicator-set", "detail": "cup vs dog", "cardinality": 2}
  ]
})";

  HypothesisSpec from_toml = load_spec_text(toml_text, "toml");
  HypothesisSpec from_json = load_spec_text(json_text, "json");

  CHECK(from_toml.name == from_json.name);
  CHECK(from_toml.domain.dims == from_json.domain.dims);
  CHECK(from_toml.domain.bounds.size() == from_json.domain.bounds.size());
  CHECK(from_toml.range.structure == from_json.range.structure);
  REQUIRE(from_toml.sources.size() == 2);
  REQUIRE(from_json.sources.size() == 2);
  CHECK(from_toml.sources[1].cardinality == std::size_t{2});

  AuditReport toml_report = audit_spec(from_toml);
  AuditReport json_report = audit_spec(from_json);
  CHECK(toml_report.verdict == json_report.verdict);
  REQUIRE(toml_report.violations.size() == 1);
  REQUIRE(json_report.violations.size() == 1);
  CHECK(toml_report.violations[0].rule == json_report.violations[0].rule);
  CHECK(toml_report.violations[0].explanation == json_report.violations[0].explanation);
}

TEST_CASE("spec parsing validates shape and vocabulary") {
  // Unknown source kind.
  CHECK_RAISES(unknown_provenance_kind, load_spec_text(R"(name = "x"
[domain]
dims = 1
[range]
dims = 1
[[sources]]
kind = "oracle"
)",
                                                       "toml"));

  // Missing sources entirely.
  CHECK_RAISES(parse_error, load_spec_text(R"(name = "x"
[domain]
dims = 1
[range]
dims = 1
)",
                                           "toml"));

  // Missing name.
  CHECK_RAISES(parse_error, load_spec_text(R"([domain]
dims = 1
[range]
dims = 1
[[sources]]
kind = "observation-from-domain"
)",
                                           "toml"));

  // Bounds count must match dims.
  CHECK_RAISES(parse_error, load_spec_text(R"({
    "name": "x",
    "domain": {"dims": 2, "bounds": [["0", "1"]]},
    "range": {"dims": 1},
    "sources": [{"kind": "observation-from-domain"}]
  })",
                                           "json"));

  // Inverted bounds.
  CHECK_RAISES(parse_error, load_spec_text(R"({
    "name": "x",
    "domain": {"dims": 1, "bounds": [["5", "1"]]},
    "range": {"dims": 1},
    "sources": [{"kind": "observation-from-domain"}]
  })",
                                           "json"));

  // Malformed TOML and JSON surface as parse errors with positions.
  CHECK_RAISES(parse_error, load_spec_text("name = \"unterminated", "toml"));
  CHECK_RAISES(parse_error, load_spec_text("{\"name\": ", "json"));
  CHECK_RAISES(parse_error, load_spec_text("name = \"x\"", "yaml"));
}

TEST_CASE("the TOML subset covers the spec surface") {
  // Comments, booleans, integers, nested tables, arrays of tables.
  const std::string text = R"(# leading comment
name = "tolerant" # trailing comment
notes = "quoted \"inner\" text"

[domain]
dims = 2
bounds = [["-1/2", "1/2"], ["0", "1"]] # rationals as strings

[range]
dims = 1
structure = "levels"

[[sources]]
kind = "external-model-output"
producer_is_memory_system = true
cardinality = 1_000

[[sources]]
kind = "dataset-statistic"
stage = "reporting"
)";
  HypothesisSpec spec = load_spec_text(text, "toml");
  CHECK(spec.name == "tolerant");
  CHECK(spec.notes == "quoted \"inner\" text");
  CHECK(spec.domain.bounds[0].lo == rat("-1/2"));
  REQUIRE(spec.sources.size() == 2);
  CHECK(spec.sources[0].producer_is_memory_system);
  CHECK(spec.sources[0].cardinality == std::size_t{1000});
  CHECK(spec.sources[1].stage == UseStage::reporting);

  AuditReport report = audit_spec(spec);
  CHECK(report.verdict == AuditVerdict::learning_candidate);
  REQUIRE(report.warnings.size() == 1);
  CHECK(report.warnings[0].rule == "WARN-MEMORY-PRODUCER");
}
