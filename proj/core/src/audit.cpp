#include "maplaw/audit.hpp"

#include "maplaw/errors.hpp"
#include "toml_lite.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>
#include <utility>

namespace maplaw {

namespace {

using nlohmann::json;

}  // namespace

const char* kind_name(SourceKind kind) noexcept {
  switch (kind) {
    case SourceKind::observation_from_domain: return "observation-from-domain";
    case SourceKind::indicator_set: return "indicator-set";
    case SourceKind::dataset_statistic: return "dataset-statistic";
    case SourceKind::external_model_output: return "external-model-output";
    case SourceKind::human_label_feed: return "human-label-feed";
    case SourceKind::external_dictionary: return "external-dictionary";
    case SourceKind::test_criterion: return "test-criterion";
  }
  return "unknown";
}

SourceKind kind_from_name(std::string_view name) {
  static constexpr SourceKind kAll[] = {
      SourceKind::observation_from_domain, SourceKind::indicator_set,
      SourceKind::dataset_statistic,       SourceKind::external_model_output,
      SourceKind::human_label_feed,        SourceKind::external_dictionary,
      SourceKind::test_criterion,
  };
  for (SourceKind kind : kAll)
    if (name == kind_name(kind)) return kind;
  raise(Errc::unknown_provenance_kind,
        "'" + std::string(name) + "' is not a recognized provenance kind");
}

const char* stage_name(UseStage stage) noexcept {
  return stage == UseStage::construction ? "construction" : "reporting";
}

UseStage stage_from_name(std::string_view name) {
  if (name == "construction") return UseStage::construction;
  if (name == "reporting") return UseStage::reporting;
  raise(Errc::parse_error, "stage must be 'construction' or 'reporting', got '" +
                               std::string(name) + "'");
}

const char* audit_verdict_name(AuditVerdict verdict) noexcept {
  return verdict == AuditVerdict::learning_candidate ? "learning-candidate" : "non-learning";
}

namespace {

[[noreturn]] void field_error(const std::string& field, const std::string& what) {
  raise(Errc::parse_error, "field '" + field + "': " + what);
}

Rational rational_field(const json& v, const std::string& field) {
  if (v.is_string()) {
    auto parsed = try_parse_rational(v.get<std::string>());
    if (!parsed) field_error(field, "'" + v.get<std::string>() + "' is not a rational");
    return *parsed;
  }
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_number_unsigned()) return Rational(v.get<unsigned long long>());
  if (v.is_number_float()) return Rational(v.get<double>());
  field_error(field, "expected a number or rational string");
}

std::size_t dims_field(const json& obj, const std::string& field) {
  if (!obj.contains("dims")) return 1;
  const json& v = obj.at("dims");
  if (!v.is_number_integer() && !v.is_number_unsigned())
    field_error(field + ".dims", "expected an integer");
  long long dims = v.get<long long>();
  if (dims < 1) field_error(field + ".dims", "must be positive");
  return static_cast<std::size_t>(dims);
}

ProvenanceTag tag_from_json(const json& obj, std::size_t index) {
  const std::string where = "sources[" + std::to_string(index) + "]";
  if (!obj.is_object()) field_error(where, "expected a table");
  if (!obj.contains("kind") || !obj.at("kind").is_string())
    field_error(where + ".kind", "required string");
  ProvenanceTag tag;
  tag.kind = kind_from_name(obj.at("kind").get<std::string>());
  if (obj.contains("detail")) {
    if (!obj.at("detail").is_string()) field_error(where + ".detail", "expected a string");
    tag.detail = obj.at("detail").get<std::string>();
  }
  if (obj.contains("cardinality")) {
    const json& c = obj.at("cardinality");
    if (!c.is_number_integer() && !c.is_number_unsigned())
      field_error(where + ".cardinality", "expected an integer");
    long long n = c.get<long long>();
    if (n < 0) field_error(where + ".cardinality", "must be nonnegative");
    tag.cardinality = static_cast<std::size_t>(n);
  }
  if (obj.contains("stage")) {
    if (!obj.at("stage").is_string()) field_error(where + ".stage", "expected a string");
    tag.stage = stage_from_name(obj.at("stage").get<std::string>());
  }
  if (obj.contains("producer_is_memory_system")) {
    const json& p = obj.at("producer_is_memory_system");
    if (!p.is_boolean()) field_error(where + ".producer_is_memory_system", "expected a boolean");
    tag.producer_is_memory_system = p.get<bool>();
  }
  return tag;
}

HypothesisSpec spec_from_json(const json& doc) {
  if (!doc.is_object()) raise(Errc::parse_error, "spec document must be a table");
  HypothesisSpec spec;
  if (!doc.contains("name") || !doc.at("name").is_string() ||
      doc.at("name").get<std::string>().empty())
    field_error("name", "required nonempty string");
  spec.name = doc.at("name").get<std::string>();
  if (doc.contains("notes")) {
    if (!doc.at("notes").is_string()) field_error("notes", "expected a string");
    spec.notes = doc.at("notes").get<std::string>();
  }

  if (doc.contains("domain")) {
    const json& d = doc.at("domain");
    if (!d.is_object()) field_error("domain", "expected a table");
    spec.domain.dims = dims_field(d, "domain");
    if (d.contains("bounds")) {
      const json& bounds = d.at("bounds");
      if (!bounds.is_array()) field_error("domain.bounds", "expected an array of [lo, hi] pairs");
      std::size_t i = 0;
      for (const json& entry : bounds) {
        const std::string where = "domain.bounds[" + std::to_string(i) + "]";
        if (!entry.is_array() || entry.size() != 2) field_error(where, "expected [lo, hi]");
        DimensionBounds b;
        b.lo = rational_field(entry.at(0), where);
        b.hi = rational_field(entry.at(1), where);
        if (b.lo > b.hi) field_error(where, "lower bound exceeds upper bound");
        spec.domain.bounds.push_back(std::move(b));
        ++i;
      }
      if (spec.domain.bounds.size() != spec.domain.dims)
        field_error("domain.bounds", "expected " + std::to_string(spec.domain.dims) +
                                         " entries, got " +
                                         std::to_string(spec.domain.bounds.size()));
    }
  }
  if (doc.contains("range")) {
    const json& r = doc.at("range");
    if (!r.is_object()) field_error("range", "expected a table");
    spec.range.dims = dims_field(r, "range");
    if (r.contains("structure")) {
      if (!r.at("structure").is_string()) field_error("range.structure", "expected a string");
      spec.range.structure = r.at("structure").get<std::string>();
    }
  }

  if (!doc.contains("sources") || !doc.at("sources").is_array() || doc.at("sources").empty())
    field_error("sources", "at least one source is required");
  std::size_t index = 0;
  for (const json& entry : doc.at("sources")) {
    spec.sources.push_back(tag_from_json(entry, index));
    ++index;
  }
  return spec;
}

}  // namespace

HypothesisSpec load_spec_text(const std::string& text, const std::string& format) {
  if (format == "toml") return spec_from_json(toml_lite::parse(text));
  if (format == "json") {
    json doc;
    try {
      doc = json::parse(text);
    } catch (const json::parse_error& e) {
      raise(Errc::parse_error, e.what());
    }
    return spec_from_json(doc);
  }
  raise(Errc::parse_error, "unsupported spec format '" + format + "' (expected toml or json)");
}

HypothesisSpec load_spec_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(Errc::parse_error, "cannot read spec file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  std::string format;
  auto dot = path.rfind('.');
  if (dot != std::string::npos) format = path.substr(dot + 1);
  if (format != "toml" && format != "json")
    raise(Errc::parse_error, "spec file '" + path + "' must end in .toml or .json");
  return load_spec_text(buffer.str(), format);
}

namespace {

std::string describe(const ProvenanceTag& tag) {
  std::string out = kind_name(tag.kind);
  if (!tag.detail.empty()) out += " (" + tag.detail + ")";
  if (tag.cardinality) out += ", cardinality " + std::to_string(*tag.cardinality);
  return out;
}

}  // namespace

AuditReport audit_spec(const HypothesisSpec& spec) {
  AuditReport report;
  report.spec_name = spec.name;

  for (std::size_t i = 0; i < spec.sources.size(); ++i) {
    const ProvenanceTag& tag = spec.sources[i];
    switch (tag.kind) {
      case SourceKind::observation_from_domain:
        break;  // observation-grade
      case SourceKind::indicator_set:
        report.violations.push_back(
            {"LAW2-INDICATOR", i,
             describe(tag) + " injects first-order global information about the mapping"});
        break;
      case SourceKind::external_dictionary:
        report.violations.push_back(
            {"LAW2-DICTIONARY", i,
             describe(tag) + " supplies range associations the model never constructs itself"});
        break;
      case SourceKind::test_criterion:
        report.violations.push_back(
            {"LAW2-TEST-CRITERION", i,
             describe(tag) + " is a criterion on the finished mapping, hence first-order"});
        break;
      case SourceKind::human_label_feed:
        report.violations.push_back(
            {"LAW2-HUMAN-LABEL", i,
             describe(tag) + " feeds labels produced outside the model's own domain"});
        break;
      case SourceKind::dataset_statistic:
        // Construction-time use shapes the model; reporting-time use does not.
        if (tag.stage == UseStage::construction)
          report.violations.push_back(
              {"LAW2-DATASET-STAT", i, describe(tag) + " consumed while building the model"});
        break;
      case SourceKind::external_model_output:
        if (tag.producer_is_memory_system)
          report.warnings.push_back(
              {"WARN-MEMORY-PRODUCER", i,
               describe(tag) + " accepted on the attestation that its producer is a memory "
                               "system, not a learning model"});
        else
          report.violations.push_back(
              {"LAW2-EXTERNAL-MODEL", i,
               describe(tag) + " has no attestation about its producer; treated as the "
                               "banned case"});
        break;
    }
  }

  for (std::size_t d = 0; d < spec.domain.bounds.size(); ++d) {
    const DimensionBounds& b = spec.domain.bounds[d];
    if (b.lo == b.hi)
      report.warnings.push_back({"WARN-NARROW-RANGE", std::nullopt,
                                 "domain dimension " + std::to_string(d) +
                                     " declares width-zero bounds [" + to_string(b.lo) + ", " +
                                     to_string(b.hi) + "]"});
  }

  report.verdict = report.violations.empty() ? AuditVerdict::learning_candidate
                                             : AuditVerdict::non_learning;
  return report;
}

}  // namespace maplaw
