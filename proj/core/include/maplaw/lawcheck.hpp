#pragma once

#include "maplaw/relation.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace maplaw {

// Evidence that a mapping is an information black hole: a nonempty proper
// subset of the domain whose image already covers the whole range, so no
// remaining points can carry a disjoint concept.
struct BlackHoleWitness {
  ConceptSet x_s;            // domain-side
  ConceptSet covered_range;  // image(M, x_s), equal to M.range
};

enum class Law1Verdict { satisfies, violates, vacuous };
enum class Law1Method { exhaustive, fast };

const char* law1_verdict_name(Law1Verdict verdict) noexcept;
const char* law1_method_name(Law1Method method) noexcept;

struct Law1Report {
  Law1Verdict verdict = Law1Verdict::vacuous;
  Law1Method method = Law1Method::fast;
  std::optional<BlackHoleWitness> witness;
  // Domain pairs with equal images, each pair sorted, the list sorted.
  // For a value with preimages p0 < p1 < ... the pairs are (p0, p1),
  // (p0, p2), ... so the lexicographically smallest pair comes first.
  std::vector<std::pair<Point, Point>> collisions;
};

struct Law1Options {
  Mode mode = Mode::exact;
  double tolerance = kDefaultTolerance;  // float mode only
};

inline constexpr std::size_t kDefaultMaxExhaustiveDomain = 20;

// Decides Law I by evaluating its quantifiers directly: every nonempty
// proper subset X_S of D must admit a nonempty X_N ⊆ D∖X_S whose image is
// disjoint from image(X_S). Exponential; guarded by max_domain
// (Errc::domain_too_large beyond it). Exact arithmetic only.
Law1Report check_law1_exhaustive(const FiniteMapping& m,
                                 std::size_t max_domain = kDefaultMaxExhaustiveDomain);

// Decides Law I in O(|D|) expected time via collision detection on the
// canonical point encodings: for |D| >= 2 the law holds iff M is
// injective. Float mode detects collisions within options.tolerance.
Law1Report check_law1_fast(const FiniteMapping& m, const Law1Options& options = {});

// Witness iff M violates Law I: for the smallest collision pair (x1, x2),
// x_s = D∖{x2}. The covering postcondition is re-verified before return.
std::optional<BlackHoleWitness> black_hole_witness(const FiniteMapping& m,
                                                   const Law1Options& options = {});

// Independent re-check of the witness invariant: x_s is a nonempty proper
// subset of the domain and image(M, x_s) covers M.range (within tolerance
// in float mode).
bool verify_witness(const FiniteMapping& m, const BlackHoleWitness& witness,
                    const Law1Options& options = {});

}  // namespace maplaw
