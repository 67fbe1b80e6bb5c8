#pragma once

#include <stdexcept>
#include <string>

namespace maplaw {

// Every recoverable failure in the library carries one of these codes.
// Verdicts (law violations, non-learning classifications, inseparable
// pairs) are results, not errors; they never throw.
enum class Errc {
  conflicting_image,
  empty_mapping,
  point_not_in_domain,
  point_not_in_range,
  dimension_mismatch,
  domain_too_large,
  empty_roots,
  overlapping_concepts,
  duplicate_levels,
  unrecognized_representation,
  incomplete_cover,
  law1_violation,
  empty_concept_set,
  parse_error,
  unknown_provenance_kind,
  empty_grid,
  not_a_partition,
  not_a_refinement,
  base_spec_already_violating,
  invalid_argument,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void raise(Errc code, const std::string& message);

}  // namespace maplaw
