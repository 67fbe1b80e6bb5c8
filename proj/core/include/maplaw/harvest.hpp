#pragma once

#include "maplaw/lawcheck.hpp"
#include "maplaw/relation.hpp"

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace maplaw {

// The 1-D equality constraint Phi(t) = (t - root_1)...(t - root_i) + r.
// Phi evaluates to exactly r at every root; no tolerance anywhere.
struct EqualityConstraint {
  std::vector<Rational> roots;  // duplicates permitted
  Rational offset;              // r
};

EqualityConstraint build_constraint(std::vector<Rational> roots, Rational offset);
Rational eval_constraint(const EqualityConstraint& phi, const Rational& t);

// A function assigning one distinct level to each of a list of pairwise
// disjoint range concepts. Total on the union of its pieces, undefined
// elsewhere. Piece order is declaration order; it fixes default levels
// and every serialized report.
class HarvestFunction {
 public:
  struct Piece {
    ConceptSet concept_set;
    Rational level;
  };

  const std::vector<Piece>& pieces() const { return pieces_; }
  std::size_t point_dim() const { return pieces_.front().concept_set.dim(); }

  // Index of the unique piece containing y, if any.
  std::optional<std::size_t> piece_of(const Point& y) const;
  bool covers(const std::vector<Point>& points) const;
  bool all_singleton() const;

  // Canonical fingerprint, used as provenance by downstream artifacts.
  std::string fingerprint() const;

  friend HarvestFunction build_harvest(std::vector<ConceptSet> concepts,
                                       std::optional<std::vector<Rational>> levels);

 private:
  HarvestFunction() = default;

  std::vector<Piece> pieces_;
  std::unordered_map<std::string, std::size_t> index_;  // canonical point key -> piece
};

// Levels default to 0, 1, 2, ... in declaration order when omitted.
HarvestFunction build_harvest(std::vector<ConceptSet> concepts,
                              std::optional<std::vector<Rational>> levels = std::nullopt);

// The level of the unique piece containing y.
// Throws Errc::unrecognized_representation when y lies outside every
// piece; an out-of-cover default would smuggle in a known-unknown class.
Rational harvest_eval(const HarvestFunction& h, const Point& y);

// F_L = H ∘ M as a finite mapping into 1-D level points. Requires M to
// pass the fast Law I check and H to cover M.range.
FiniteMapping compose_with_harvest(const FiniteMapping& m, const HarvestFunction& h);

}  // namespace maplaw
