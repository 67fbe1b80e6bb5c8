#pragma once

#include "maplaw/harvest.hpp"
#include "maplaw/relation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace maplaw {

// Parallel hyperplanes {z : direction.z = level}, one per harvest level.
// The direction never depends on what the concepts are, only on the
// ambient dimension; that independence is the point of the construction.
struct VectorSet {
  Mode mode = Mode::exact;
  std::vector<Rational> direction;  // unit vector in R^k
  std::vector<Rational> levels;     // pairwise distinct

  std::size_t dim() const { return direction.size(); }
};

// Validates the unit-norm invariant (exactly in exact mode, within
// kDirectionTolerance in float mode) and level distinctness.
VectorSet make_vector_set(Mode mode, std::vector<Rational> direction,
                          std::vector<Rational> levels);

std::vector<Rational> axis_direction(std::size_t k, std::size_t axis);
// Float-mode helper: L2-normalizes in double precision, stores the exact
// rational values of the resulting doubles.
std::vector<Rational> normalized_direction(const std::vector<double>& v);

// The mapping L: D -> R^k with L(x) on the hyperplane of level H(M(x)).
struct EmbeddingL {
  std::vector<std::pair<Point, Point>> table;  // sorted by domain point
  std::string mapping_id;                      // provenance: info_type_id(M)
  std::string harvest_id;                      // provenance: H fingerprint
};

struct HyperplaneBundle {
  VectorSet vector_set;
  EmbeddingL embedding;
};

struct HyperplaneOptions {
  std::size_t k = 2;
  Mode mode = Mode::exact;
  std::size_t axis = 0;                             // exact mode: basis axis index
  std::optional<std::vector<double>> direction;     // float mode only
};

// The embedding L(x) = H(M(x)) * direction, chosen so that
// eval_vc(V_C, L(x)) reproduces H(M(x)) and distinct concepts land on
// distinct parallel hyperplanes.
HyperplaneBundle to_hyperplane_form(const FiniteMapping& m, const HarvestFunction& h,
                                    const HyperplaneOptions& options = {});

// direction . z — the recovered level. Exact rational arithmetic in both
// modes; float mode differs only in what directions were admissible.
Rational eval_vc(const VectorSet& vc, const Point& z);

// ---------------------------------------------------------------------
// Linear separability of embedded concept groups.

enum class PairVerdict { separable, inseparable, iteration_cap_exceeded };
const char* pair_verdict_name(PairVerdict verdict) noexcept;

enum class GroupSide { above, below };

struct SeparatingHyperplane {
  std::vector<Rational> normal;  // scaled so max |coefficient| = 1, leading sign positive
  Rational offset;               // hyperplane {z : normal.z = offset}
  Rational margin;               // min |normal.z - offset| over all points, > 0
  GroupSide first_group_side;    // which side of the hyperplane group a lies on
};

struct PairResult {
  std::size_t group_a = 0;
  std::size_t group_b = 0;
  PairVerdict verdict = PairVerdict::iteration_cap_exceeded;
  std::optional<SeparatingHyperplane> hyperplane;  // separable only
  std::optional<Point> hull_witness;               // inseparable: common hull point
  std::string certificate;                         // "exact-lp" or "perceptron-verified"
};

struct SeparabilityOptions {
  std::size_t perceptron_cap = 20000;  // update budget before falling back
  std::size_t exact_limit = 120;       // max |A|+|B| for the exact LP fallback
};

struct SeparabilityReport {
  std::vector<PairResult> pairs;  // deterministic (i, j) order, i < j
};

// Strict separability for every pair of groups. Fast path: margin
// perceptron on normalized data, certified by exact re-verification of
// the candidate hyperplane. Exact path (small instances): rational LPs
// deciding the question outright, producing either a canonical
// maximum-margin hyperplane or a point in both convex hulls.
SeparabilityReport check_linear_separability(const std::vector<ConceptSet>& groups,
                                             const SeparabilityOptions& options = {});

}  // namespace maplaw
