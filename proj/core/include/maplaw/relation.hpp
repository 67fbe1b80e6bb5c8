#pragma once

#include "maplaw/point.hpp"

#include <string>
#include <utility>
#include <vector>

namespace maplaw {

// A total single-valued finite mapping M: D -> O. One value of this type
// is one configuration of a dynamic system; the configuration label, when
// there is one, travels in `meta` and is never interpreted.
//
// Canonical form: the table is sorted lexicographically by domain point,
// the range is the sorted deduplicated set of table values. Everything
// downstream (fingerprints, reports, serializers) leans on that order.
class FiniteMapping {
 public:
  static FiniteMapping build(std::vector<std::pair<Point, Point>> pairs, std::string meta = "");

  std::size_t size() const { return table_.size(); }  // |D|
  std::size_t domain_dim() const { return m_; }
  std::size_t range_dim() const { return n_; }
  const std::vector<std::pair<Point, Point>>& table() const { return table_; }
  const std::vector<Point>& range() const { return range_; }
  const std::string& meta() const { return meta_; }

  std::vector<Point> domain() const;
  bool in_domain(const Point& x) const;
  bool in_range(const Point& y) const;
  // M(x); throws Errc::point_not_in_domain.
  const Point& value_at(const Point& x) const;

 private:
  FiniteMapping() = default;

  std::vector<std::pair<Point, Point>> table_;  // sorted by domain point
  std::vector<Point> range_;                    // sorted, unique
  std::size_t m_ = 0;
  std::size_t n_ = 0;
  std::string meta_;
};

// Convenience for 1-D integer tables, the workhorse of tests and demos.
FiniteMapping mapping_from_scalars(const std::vector<std::pair<Rational, Rational>>& pairs,
                                   std::string meta = "");

// Global representations of the concept carried by X: {M(x) : x in X}.
ConceptSet image(const FiniteMapping& m, const ConceptSet& x);

// The concept's unique local representation: {x : M(x) in Y}.
ConceptSet preimage(const FiniteMapping& m, const ConceptSet& y);

// Whether every range element of `lower` is homologous global information
// with respect to `higher`: domain(lower) ∪ range(lower) ⊆ domain(higher).
bool is_homologous_global(const FiniteMapping& lower, const FiniteMapping& higher);

// Whether every range element of `higher` is first-order global
// information with respect to `lower`: range(lower) ⊆ domain(higher).
bool is_first_order_global(const FiniteMapping& lower, const FiniteMapping& higher);

// Canonical fingerprint of the table. Stable under input reordering,
// distinct for extensionally different mappings.
std::string info_type_id(const FiniteMapping& m);

}  // namespace maplaw
