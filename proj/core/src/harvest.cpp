#include "maplaw/harvest.hpp"

#include "maplaw/errors.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace maplaw {

EqualityConstraint build_constraint(std::vector<Rational> roots, Rational offset) {
  if (roots.empty()) raise(Errc::empty_roots, "an equality constraint needs at least one root");
  return EqualityConstraint{std::move(roots), std::move(offset)};
}

Rational eval_constraint(const EqualityConstraint& phi, const Rational& t) {
  Rational product(1);
  for (const Rational& root : phi.roots) product *= (t - root);
  return product + phi.offset;
}

std::optional<std::size_t> HarvestFunction::piece_of(const Point& y) const {
  auto it = index_.find(canonical_key(y));
  if (it == index_.end() || y.dim() != point_dim()) return std::nullopt;
  return it->second;
}

bool HarvestFunction::covers(const std::vector<Point>& points) const {
  return std::all_of(points.begin(), points.end(),
                     [this](const Point& p) { return piece_of(p).has_value(); });
}

bool HarvestFunction::all_singleton() const {
  return std::all_of(pieces_.begin(), pieces_.end(),
                     [](const Piece& piece) { return piece.concept_set.members.size() == 1; });
}

std::string HarvestFunction::fingerprint() const {
  std::string canon;
  for (const Piece& piece : pieces_) {
    canon += "[";
    for (const Point& p : piece.concept_set.members) {
      canon += canonical_key(p);
      canon += ";";
    }
    canon += "]=";
    canon += to_string(piece.level);
    canon += "|";
  }
  return fnv1a_hex(canon);
}

HarvestFunction build_harvest(std::vector<ConceptSet> concepts,
                              std::optional<std::vector<Rational>> levels) {
  if (concepts.empty()) raise(Errc::invalid_argument, "harvest needs at least one concept");
  if (levels && levels->size() != concepts.size()) {
    raise(Errc::invalid_argument, "got " + std::to_string(levels->size()) + " levels for " +
                                      std::to_string(concepts.size()) + " concepts");
  }

  const std::size_t dim = concepts.front().dim();
  for (const ConceptSet& c : concepts) {
    if (c.side != Side::range_side) {
      raise(Errc::invalid_argument, "concept '" + c.name + "' is not range-side");
    }
    if (c.dim() != dim) {
      raise(Errc::dimension_mismatch, "concept '" + c.name + "' has dimension " +
                                          std::to_string(c.dim()) + ", expected " +
                                          std::to_string(dim));
    }
  }

  if (levels) {
    std::set<Rational> seen;
    for (const Rational& level : *levels) {
      if (!seen.insert(level).second) {
        raise(Errc::duplicate_levels, "level " + to_string(level) + " appears twice");
      }
    }
  }

  HarvestFunction h;
  h.pieces_.reserve(concepts.size());
  for (std::size_t i = 0; i < concepts.size(); ++i) {
    Rational level = levels ? (*levels)[i] : Rational(static_cast<long>(i));
    for (const Point& p : concepts[i].members) {
      auto [it, inserted] = h.index_.emplace(canonical_key(p), i);
      if (!inserted) {
        raise(Errc::overlapping_concepts,
              "point " + display(p) + " belongs to both '" + concepts[it->second].name +
                  "' and '" + concepts[i].name + "'; H would not be a function");
      }
    }
    h.pieces_.push_back(HarvestFunction::Piece{std::move(concepts[i]), std::move(level)});
  }
  return h;
}

Rational harvest_eval(const HarvestFunction& h, const Point& y) {
  auto piece = h.piece_of(y);
  if (!piece) {
    raise(Errc::unrecognized_representation,
          display(y) + " lies outside every harvested concept");
  }
  return h.pieces()[*piece].level;
}

FiniteMapping compose_with_harvest(const FiniteMapping& m, const HarvestFunction& h) {
  const Law1Report law = check_law1_fast(m);
  if (law.verdict == Law1Verdict::violates) {
    raise(Errc::law1_violation, "the mapping is an information black hole; harvest first "
                                "requires a mapping that keeps concepts distinguishable");
  }
  if (!h.covers(m.range())) {
    raise(Errc::incomplete_cover, "harvest pieces do not cover the mapping's range");
  }

  std::vector<std::pair<Point, Point>> composed;
  composed.reserve(m.size());
  for (const auto& [x, y] : m.table()) {
    composed.emplace_back(x, scalar_point(harvest_eval(h, y)));
  }
  FiniteMapping f = FiniteMapping::build(std::move(composed), m.meta());

  // With singleton pieces, distinct representations get distinct levels,
  // so the composition must itself pass the fast check.
  if (h.all_singleton() && m.size() >= 2 &&
      check_law1_fast(f).verdict != Law1Verdict::satisfies) {
    throw std::logic_error("singleton-piece composition failed the fast Law I check");
  }
  return f;
}

}  // namespace maplaw
