#include "maplaw/relation.hpp"

#include "maplaw/errors.hpp"

#include <algorithm>

namespace maplaw {

FiniteMapping FiniteMapping::build(std::vector<std::pair<Point, Point>> pairs, std::string meta) {
  if (pairs.empty()) raise(Errc::empty_mapping, "a mapping needs at least one pair");

  std::sort(pairs.begin(), pairs.end());
  // Identical duplicate pairs collapse; equal keys with different values
  // break single-valuedness.
  std::vector<std::pair<Point, Point>> table;
  table.reserve(pairs.size());
  for (auto& pair : pairs) {
    if (!table.empty() && table.back().first == pair.first) {
      if (table.back().second != pair.second) {
        raise(Errc::conflicting_image, "domain point " + display(pair.first) + " maps to both " +
                                           display(table.back().second) + " and " +
                                           display(pair.second));
      }
      continue;
    }
    table.push_back(std::move(pair));
  }

  const std::size_t m = table.front().first.dim();
  const std::size_t n = table.front().second.dim();
  for (const auto& [x, y] : table) {
    if (x.dim() != m || y.dim() != n) {
      raise(Errc::dimension_mismatch, "pair " + display(x) + " -> " + display(y) +
                                          " breaks the (" + std::to_string(m) + "," +
                                          std::to_string(n) + ") shape");
    }
  }

  FiniteMapping out;
  out.table_ = std::move(table);
  out.m_ = m;
  out.n_ = n;
  out.meta_ = std::move(meta);
  out.range_.reserve(out.table_.size());
  for (const auto& [x, y] : out.table_) out.range_.push_back(y);
  std::sort(out.range_.begin(), out.range_.end());
  out.range_.erase(std::unique(out.range_.begin(), out.range_.end()), out.range_.end());
  return out;
}

std::vector<Point> FiniteMapping::domain() const {
  std::vector<Point> points;
  points.reserve(table_.size());
  for (const auto& [x, y] : table_) points.push_back(x);
  return points;
}

bool FiniteMapping::in_domain(const Point& x) const {
  auto it = std::lower_bound(table_.begin(), table_.end(), x,
                             [](const auto& pair, const Point& key) { return pair.first < key; });
  return it != table_.end() && it->first == x;
}

bool FiniteMapping::in_range(const Point& y) const {
  return std::binary_search(range_.begin(), range_.end(), y);
}

const Point& FiniteMapping::value_at(const Point& x) const {
  auto it = std::lower_bound(table_.begin(), table_.end(), x,
                             [](const auto& pair, const Point& key) { return pair.first < key; });
  if (it == table_.end() || !(it->first == x)) {
    raise(Errc::point_not_in_domain, display(x) + " is not in the domain");
  }
  return it->second;
}

FiniteMapping mapping_from_scalars(const std::vector<std::pair<Rational, Rational>>& pairs,
                                   std::string meta) {
  std::vector<std::pair<Point, Point>> lifted;
  lifted.reserve(pairs.size());
  for (const auto& [x, y] : pairs) lifted.emplace_back(scalar_point(x), scalar_point(y));
  return FiniteMapping::build(std::move(lifted), std::move(meta));
}

ConceptSet image(const FiniteMapping& m, const ConceptSet& x) {
  std::vector<Point> values;
  values.reserve(x.members.size());
  for (const Point& p : x.members) {
    if (!m.in_domain(p)) {
      raise(Errc::point_not_in_domain, display(p) + " from concept '" + x.name + "'");
    }
    values.push_back(m.value_at(p));
  }
  return ConceptSet(x.name, Side::range_side, std::move(values));
}

ConceptSet preimage(const FiniteMapping& m, const ConceptSet& y) {
  for (const Point& p : y.members) {
    if (!m.in_range(p)) {
      raise(Errc::point_not_in_range, display(p) + " from concept '" + y.name + "'");
    }
  }
  std::vector<Point> sources;
  for (const auto& [x, value] : m.table()) {
    if (y.contains(value)) sources.push_back(x);
  }
  return ConceptSet(y.name, Side::domain_side, std::move(sources));
}

namespace {

void require_dims(std::size_t got, std::size_t want, const char* what) {
  if (got != want) {
    raise(Errc::dimension_mismatch, std::string(what) + ": expected dimension " +
                                        std::to_string(want) + ", got " + std::to_string(got));
  }
}

}  // namespace

bool is_homologous_global(const FiniteMapping& lower, const FiniteMapping& higher) {
  require_dims(lower.domain_dim(), higher.domain_dim(), "lower domain vs higher domain");
  require_dims(lower.range_dim(), higher.domain_dim(), "lower range vs higher domain");
  for (const auto& [x, y] : lower.table()) {
    if (!higher.in_domain(x) || !higher.in_domain(y)) return false;
  }
  return true;
}

bool is_first_order_global(const FiniteMapping& lower, const FiniteMapping& higher) {
  require_dims(lower.range_dim(), higher.domain_dim(), "lower range vs higher domain");
  for (const Point& y : lower.range()) {
    if (!higher.in_domain(y)) return false;
  }
  return true;
}

std::string info_type_id(const FiniteMapping& m) {
  std::string canon = std::to_string(m.domain_dim()) + ":" + std::to_string(m.range_dim()) + ":";
  for (const auto& [x, y] : m.table()) {
    canon += canonical_key(x);
    canon += ">";
    canon += canonical_key(y);
    canon += ";";
  }
  return fnv1a_hex(canon);
}

}  // namespace maplaw
