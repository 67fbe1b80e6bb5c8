#pragma once

#include "maplaw/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace maplaw {

// Closed enumeration of declared information sources. Each kind is either
// observation-grade or flagged by exactly one audit rule.
enum class SourceKind {
  observation_from_domain,
  indicator_set,
  dataset_statistic,
  external_model_output,
  human_label_feed,
  external_dictionary,
  test_criterion,
};

const char* kind_name(SourceKind kind) noexcept;          // kebab-case
SourceKind kind_from_name(std::string_view name);         // UnknownProvenanceKind

enum class UseStage { construction, reporting };
const char* stage_name(UseStage stage) noexcept;
UseStage stage_from_name(std::string_view name);

struct ProvenanceTag {
  SourceKind kind = SourceKind::observation_from_domain;
  std::string detail;
  std::optional<std::size_t> cardinality;          // e.g. indicator set size
  UseStage stage = UseStage::construction;         // dataset-statistic rule keys on this
  bool producer_is_memory_system = false;          // external-model-output attestation
};

struct DimensionBounds {
  Rational lo;
  Rational hi;  // lo <= hi
};

struct DomainDesc {
  std::size_t dims = 1;
  std::vector<DimensionBounds> bounds;  // empty, or one entry per dimension
};

struct RangeDesc {
  std::size_t dims = 1;
  std::string structure;
};

struct HypothesisSpec {
  std::string name;
  DomainDesc domain;
  RangeDesc range;
  std::vector<ProvenanceTag> sources;  // at least one
  std::string notes;
};

struct Violation {
  std::string rule;          // e.g. "LAW2-INDICATOR"
  std::size_t source_index;  // into HypothesisSpec::sources
  std::string explanation;
};

struct AuditWarning {
  std::string rule;  // e.g. "WARN-NARROW-RANGE"
  std::optional<std::size_t> source_index;
  std::string explanation;
};

enum class AuditVerdict { learning_candidate, non_learning };
const char* audit_verdict_name(AuditVerdict verdict) noexcept;

struct AuditReport {
  AuditVerdict verdict = AuditVerdict::learning_candidate;
  std::vector<Violation> violations;  // verdict is non_learning iff nonempty
  std::vector<AuditWarning> warnings;
  std::string spec_name;
};

// format: "toml" or "json". File loading dispatches on extension.
HypothesisSpec load_spec_text(const std::string& text, const std::string& format);
HypothesisSpec load_spec_file(const std::string& path);

// Pure rule application over the declared sources; identical specs give
// identical reports.
AuditReport audit_spec(const HypothesisSpec& spec);

}  // namespace maplaw
