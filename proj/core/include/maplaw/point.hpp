#pragma once

#include "maplaw/rational.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace maplaw {

// A point of R^m with exact rational coordinates. Equality is exact
// coordinate-wise equality; ordering is lexicographic and gives every
// container of points one canonical arrangement.
class Point {
 public:
  Point() = default;
  explicit Point(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  Point(std::initializer_list<Rational> coords) : coords_(coords) {}

  std::size_t dim() const { return coords_.size(); }
  const Rational& coord(std::size_t i) const { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }

  friend bool operator==(const Point& a, const Point& b) { return a.coords_ == b.coords_; }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
  friend bool operator<(const Point& a, const Point& b);
  friend bool operator<=(const Point& a, const Point& b) { return !(b < a); }
  friend bool operator>(const Point& a, const Point& b) { return b < a; }
  friend bool operator>=(const Point& a, const Point& b) { return !(a < b); }

 private:
  std::vector<Rational> coords_;
};

// 1-D convenience used heavily in tests and demos.
Point scalar_point(const Rational& value);

// "p/q,p/q,...": the canonical encoding hashed by fingerprints and used
// as the key of every point-indexed hash map.
std::string canonical_key(const Point& p);
// "(p/q, p/q, ...)" for messages and narratives.
std::string display(const Point& p);

// L-infinity comparison in double precision; the float-mode notion of
// "same point".
bool within_tolerance(const Point& a, const Point& b, double eps);

enum class Side { domain_side, range_side };

const char* side_name(Side side) noexcept;

// A named finite set of points living on one side of a mapping.
// Members are stored sorted and deduplicated. Invariants (nonempty,
// uniform dimension) are enforced at construction.
struct ConceptSet {
  ConceptSet(std::string name_, Side side_, std::vector<Point> members_);

  std::string name;
  Side side;
  std::vector<Point> members;  // sorted, unique

  std::size_t dim() const { return members.front().dim(); }
  bool contains(const Point& p) const;
};

bool same_members(const ConceptSet& a, const ConceptSet& b);
bool is_subset(const ConceptSet& inner, const ConceptSet& outer);
bool disjoint(const ConceptSet& a, const ConceptSet& b);

}  // namespace maplaw
