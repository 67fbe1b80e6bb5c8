#include "maplaw/errors.hpp"

namespace maplaw {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::conflicting_image: return "ConflictingImage";
    case Errc::empty_mapping: return "EmptyMapping";
    case Errc::point_not_in_domain: return "PointNotInDomain";
    case Errc::point_not_in_range: return "PointNotInRange";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::domain_too_large: return "DomainTooLarge";
    case Errc::empty_roots: return "EmptyRoots";
    case Errc::overlapping_concepts: return "OverlappingConcepts";
    case Errc::duplicate_levels: return "DuplicateLevels";
    case Errc::unrecognized_representation: return "UnrecognizedRepresentation";
    case Errc::incomplete_cover: return "IncompleteCover";
    case Errc::law1_violation: return "Law1Violation";
    case Errc::empty_concept_set: return "EmptyConceptSet";
    case Errc::parse_error: return "ParseError";
    case Errc::unknown_provenance_kind: return "UnknownProvenanceKind";
    case Errc::empty_grid: return "EmptyGrid";
    case Errc::not_a_partition: return "NotAPartition";
    case Errc::not_a_refinement: return "NotARefinement";
    case Errc::base_spec_already_violating: return "BaseSpecAlreadyViolating";
    case Errc::invalid_argument: return "InvalidArgument";
  }
  return "UnknownError";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

void raise(Errc code, const std::string& message) { throw Error(code, message); }

}  // namespace maplaw
