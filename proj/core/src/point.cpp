#include "maplaw/point.hpp"

#include "maplaw/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace maplaw {

bool operator<(const Point& a, const Point& b) {
  const std::size_t n = std::min(a.dim(), b.dim());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coords_[i] < b.coords_[i]) return true;
    if (b.coords_[i] < a.coords_[i]) return false;
  }
  return a.dim() < b.dim();
}

Point scalar_point(const Rational& value) { return Point{std::vector<Rational>{value}}; }

std::string canonical_key(const Point& p) {
  std::string key;
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (i > 0) key += ',';
    key += to_string(p.coord(i));
  }
  return key;
}

std::string display(const Point& p) {
  if (p.dim() == 1) return to_string(p.coord(0));
  return "(" + canonical_key(p) + ")";
}

bool within_tolerance(const Point& a, const Point& b, double eps) {
  if (a.dim() != b.dim()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (std::abs(to_double(a.coord(i)) - to_double(b.coord(i))) > eps) return false;
  }
  return true;
}

const char* side_name(Side side) noexcept {
  return side == Side::domain_side ? "domain-side" : "range-side";
}

ConceptSet::ConceptSet(std::string name_, Side side_, std::vector<Point> members_)
    : name(std::move(name_)), side(side_), members(std::move(members_)) {
  if (members.empty()) raise(Errc::empty_concept_set, "concept '" + name + "' has no members");
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  const std::size_t d = members.front().dim();
  for (const Point& p : members) {
    if (p.dim() != d) {
      raise(Errc::dimension_mismatch,
            "concept '" + name + "' mixes dimensions " + std::to_string(d) + " and " +
                std::to_string(p.dim()));
    }
  }
}

bool ConceptSet::contains(const Point& p) const {
  return std::binary_search(members.begin(), members.end(), p);
}

bool same_members(const ConceptSet& a, const ConceptSet& b) { return a.members == b.members; }

bool is_subset(const ConceptSet& inner, const ConceptSet& outer) {
  return std::includes(outer.members.begin(), outer.members.end(), inner.members.begin(),
                       inner.members.end());
}

bool disjoint(const ConceptSet& a, const ConceptSet& b) {
  auto it_a = a.members.begin();
  auto it_b = b.members.begin();
  while (it_a != a.members.end() && it_b != b.members.end()) {
    if (*it_a < *it_b) {
      ++it_a;
    } else if (*it_b < *it_a) {
      ++it_b;
    } else {
      return false;
    }
  }
  return true;
}

}  // namespace maplaw
