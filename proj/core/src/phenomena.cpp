#include "maplaw/phenomena.hpp"

#include "maplaw/errors.hpp"
#include "maplaw/lawcheck.hpp"

#include <algorithm>
#include <stdexcept>

namespace maplaw {

const char* catalog_name(CatalogFunction f) noexcept {
  switch (f) {
    case CatalogFunction::identity: return "identity";
    case CatalogFunction::square: return "square";
    case CatalogFunction::absolute_value: return "absolute-value";
    case CatalogFunction::sine_bhaskara: return "sine-bhaskara";
  }
  return "unknown";
}

CatalogFunction catalog_from_name(std::string_view name) {
  static constexpr CatalogFunction kAll[] = {
      CatalogFunction::identity,
      CatalogFunction::square,
      CatalogFunction::absolute_value,
      CatalogFunction::sine_bhaskara,
  };
  for (CatalogFunction f : kAll)
    if (name == catalog_name(f)) return f;
  raise(Errc::invalid_argument,
        "'" + std::string(name) +
            "' is not in the catalog (identity, square, absolute-value, sine-bhaskara)");
}

Rational eval_catalog(CatalogFunction f, const Rational& t) {
  switch (f) {
    case CatalogFunction::identity: return t;
    case CatalogFunction::square: return t * t;
    case CatalogFunction::absolute_value: return t < 0 ? Rational(-t) : t;
    case CatalogFunction::sine_bhaskara: {
      // Denominator stays positive everywhere: t(P-t) <= P^2/4 < 5P^2/4.
      static const Rational P = Rational(22) / 7;
      Rational s = t * (P - t);
      return 16 * s / (5 * P * P - 4 * s);
    }
  }
  raise(Errc::invalid_argument, "unhandled catalog function");
}

std::vector<Rational> grid_points(const GridSpec& grid) {
  if (grid.step <= 0)
    raise(Errc::invalid_argument, "grid step must be positive, got " + to_string(grid.step));
  std::vector<Rational> points;
  for (Rational t = grid.lo; t <= grid.hi; t += grid.step) points.push_back(t);
  if (points.empty())
    raise(Errc::empty_grid, "grid " + grid_display(grid) + " contains no points");
  return points;
}

std::string grid_display(const GridSpec& grid) {
  return to_string(grid.lo) + ".." + to_string(grid.hi) + " step " + to_string(grid.step);
}

FiniteMapping mapping_from_catalog(CatalogFunction f, const GridSpec& grid) {
  std::vector<std::pair<Rational, Rational>> pairs;
  for (const Rational& t : grid_points(grid)) pairs.emplace_back(t, eval_catalog(f, t));
  return mapping_from_scalars(pairs, catalog_name(f));
}

namespace {

void finish(DemoReport& report) {
  std::string canon = report.id;
  canon.push_back('\n');
  for (const auto& [key, value] : report.inputs) {
    canon += key;
    canon.push_back('=');
    canon += value;
    canon.push_back('\n');
  }
  report.input_hash = fnv1a_hex(canon);
}

std::string describe_check(const std::string& name, const std::string& grid,
                           const Law1Report& r) {
  std::string out = name + " on grid " + grid + ": " + law1_verdict_name(r.verdict);
  if (!r.collisions.empty())
    out += " with " + std::to_string(r.collisions.size()) + " colliding pair" +
           (r.collisions.size() == 1 ? "" : "s");
  return out;
}

}  // namespace

DemoReport demo_normalization(CatalogFunction f, const GridSpec& full_grid,
                              const GridSpec& shrunk_grid) {
  std::vector<Rational> full_pts = grid_points(full_grid);
  std::vector<Rational> shrunk_pts = grid_points(shrunk_grid);
  FiniteMapping m_full = mapping_from_catalog(f, full_grid);
  FiniteMapping m_shrunk = mapping_from_catalog(f, shrunk_grid);
  Law1Report before = check_law1_fast(m_full);
  Law1Report after = check_law1_fast(m_shrunk);

  // The demonstration only ever restricts the domain. Certify that by
  // comparing both tables on every shared grid point.
  std::vector<Rational> overlap;
  std::set_intersection(full_pts.begin(), full_pts.end(), shrunk_pts.begin(), shrunk_pts.end(),
                        std::back_inserter(overlap));
  for (const Rational& t : overlap) {
    if (m_full.value_at(scalar_point(t)) != m_shrunk.value_at(scalar_point(t)))
      throw std::logic_error("catalog function changed between grids");
  }

  DemoReport report;
  report.id = "normalization";
  report.inputs = {
      {"function", catalog_name(f)},
      {"full-grid", grid_display(full_grid)},
      {"shrunk-grid", grid_display(shrunk_grid)},
  };
  report.results = {
      {"before-verdict", law1_verdict_name(before.verdict)},
      {"before-collisions", std::to_string(before.collisions.size())},
      {"after-verdict", law1_verdict_name(after.verdict)},
      {"after-collisions", std::to_string(after.collisions.size())},
      {"overlap-points", std::to_string(overlap.size())},
      {"outputs-agree-on-overlap", "true"},
  };
  report.narrative.push_back(describe_check(catalog_name(f), grid_display(full_grid), before));
  report.narrative.push_back(describe_check(catalog_name(f), grid_display(shrunk_grid), after));
  report.narrative.push_back("the function itself is unchanged: outputs agree at all " +
                             std::to_string(overlap.size()) + " shared grid points");
  if (before.verdict == Law1Verdict::violates && after.verdict == Law1Verdict::satisfies) {
    report.narrative.push_back(
        "restricting the domain removed every collision; distinguishability was recovered "
        "without altering the function");
  } else if (after.verdict == Law1Verdict::violates) {
    report.narrative.push_back(
        "the restricted grid still carries collisions; this restriction does not recover "
        "distinguishability");
  } else {
    report.narrative.push_back(
        "both grids leave the function collision-free; the restriction changed nothing");
  }
  finish(report);
  return report;
}

namespace {

void validate_partition(const FiniteMapping& m, const std::vector<ConceptSet>& parts,
                        const std::string& label) {
  if (parts.empty()) raise(Errc::not_a_partition, label + " has no pieces");
  std::vector<Point> all;
  for (const ConceptSet& piece : parts) {
    if (piece.side != Side::range_side)
      raise(Errc::not_a_partition,
            "piece '" + piece.name + "' of " + label + " is not a range-side concept");
    for (const Point& y : piece.members) {
      if (y.dim() != m.range_dim() || !m.in_range(y))
        raise(Errc::not_a_partition, "point " + display(y) + " of piece '" + piece.name +
                                         "' in " + label + " is not in the mapping range");
      all.push_back(y);
    }
  }
  std::sort(all.begin(), all.end());
  for (std::size_t i = 1; i < all.size(); ++i) {
    if (all[i] == all[i - 1])
      raise(Errc::not_a_partition,
            "point " + display(all[i]) + " appears in two pieces of " + label);
  }
  if (all != m.range()) {
    for (const Point& y : m.range()) {
      if (!std::binary_search(all.begin(), all.end(), y))
        raise(Errc::not_a_partition, label + " misses range point " + display(y));
    }
    raise(Errc::not_a_partition, label + " does not match the mapping range");
  }
}

const ConceptSet& piece_containing(const std::vector<ConceptSet>& parts, const Point& y) {
  for (const ConceptSet& piece : parts)
    if (piece.contains(y)) return piece;
  throw std::logic_error("validated partition lost a range point");
}

// Every piece of fine sits inside one piece of coarse.
bool nests_in(const std::vector<ConceptSet>& fine, const std::vector<ConceptSet>& coarse) {
  for (const ConceptSet& piece : fine) {
    const ConceptSet& host = piece_containing(coarse, piece.members.front());
    if (!is_subset(piece, host)) return false;
  }
  return true;
}

std::string partition_display(const std::vector<ConceptSet>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += " | ";
    for (std::size_t j = 0; j < parts[i].members.size(); ++j) {
      if (j) out += ";";
      out += canonical_key(parts[i].members[j]);
    }
  }
  return out;
}

std::string piece_points_display(const ConceptSet& piece) {
  std::string out;
  for (std::size_t j = 0; j < piece.members.size(); ++j) {
    if (j) out += ", ";
    out += display(piece.members[j]);
  }
  return out;
}

std::string level_table(const FiniteMapping& m, const HarvestFunction& h) {
  std::string out;
  for (const Point& y : m.range()) {
    if (!out.empty()) out += ";";
    out += canonical_key(y) + "=" + to_string(harvest_eval(h, y));
  }
  return out;
}

}  // namespace

DemoReport demo_merge_split(const FiniteMapping& m, const std::vector<ConceptSet>& partition_a,
                            const std::vector<ConceptSet>& partition_b) {
  validate_partition(m, partition_a, "partition-a");
  validate_partition(m, partition_b, "partition-b");

  bool b_coarsens_a = nests_in(partition_a, partition_b);
  bool b_refines_a = nests_in(partition_b, partition_a);
  if (!b_coarsens_a && !b_refines_a)
    raise(Errc::not_a_refinement,
          "partition-b is neither a coarsening nor a refinement of partition-a");
  std::string relation = b_coarsens_a && b_refines_a ? "identical"
                         : b_coarsens_a              ? "coarsening"
                                                     : "refinement";

  HarvestFunction h_a = build_harvest(partition_a);
  HarvestFunction h_b = build_harvest(partition_b);

  std::vector<std::string> changed;
  for (const Point& y : m.range()) {
    const ConceptSet& in_a = piece_containing(partition_a, y);
    const ConceptSet& in_b = piece_containing(partition_b, y);
    if (!same_members(in_a, in_b)) changed.push_back(canonical_key(y));
  }
  std::string changed_joined;
  for (std::size_t i = 0; i < changed.size(); ++i) {
    if (i) changed_joined += ";";
    changed_joined += changed[i];
  }

  DemoReport report;
  report.id = "merge-split";
  report.inputs = {
      {"mapping", info_type_id(m)},
      {"partition-a", partition_display(partition_a)},
      {"partition-b", partition_display(partition_b)},
  };
  report.results = {
      {"relation", relation},
      {"pieces-a", std::to_string(partition_a.size())},
      {"pieces-b", std::to_string(partition_b.size())},
      {"levels-a", level_table(m, h_a)},
      {"levels-b", level_table(m, h_b)},
      {"changed-points", changed_joined},
      {"changed-count", std::to_string(changed.size())},
  };

  report.narrative.push_back("partition-a carries " + std::to_string(partition_a.size()) +
                             " pieces; partition-b carries " + std::to_string(partition_b.size()) +
                             "; partition-b is a " + relation + " of partition-a");
  if (relation == "coarsening") {
    for (const ConceptSet& big : partition_b) {
      std::size_t inside = 0;
      for (const ConceptSet& small : partition_a)
        if (is_subset(small, big)) ++inside;
      if (inside >= 2)
        report.narrative.push_back("points " + piece_points_display(big) + " formerly held " +
                                   std::to_string(inside) + " distinct levels and now share level " +
                                   to_string(harvest_eval(h_b, big.members.front())));
    }
  } else if (relation == "refinement") {
    for (const ConceptSet& big : partition_a) {
      std::size_t inside = 0;
      for (const ConceptSet& small : partition_b)
        if (is_subset(small, big)) ++inside;
      if (inside >= 2)
        report.narrative.push_back("points " + piece_points_display(big) +
                                   " formerly shared level " +
                                   to_string(harvest_eval(h_a, big.members.front())) +
                                   " and now spread across " + std::to_string(inside) +
                                   " distinct levels");
    }
  } else {
    report.narrative.push_back("the partitions are identical; no level structure changed");
  }
  if (changed.empty())
    report.narrative.push_back("no range point changed its level-sharing structure");
  else
    report.narrative.push_back(std::to_string(changed.size()) +
                               " range points changed their level-sharing structure");
  finish(report);
  return report;
}

DemoReport demo_indicator(const HypothesisSpec& base_spec) {
  AuditReport before = audit_spec(base_spec);
  if (before.verdict == AuditVerdict::non_learning)
    raise(Errc::base_spec_already_violating,
          "base spec '" + base_spec.name + "' already violates rule " +
              before.violations.front().rule);

  HypothesisSpec modified = base_spec;
  ProvenanceTag indicator;
  indicator.kind = SourceKind::indicator_set;
  indicator.detail = "object-class indicator (cup, dog)";
  indicator.cardinality = 2;
  modified.sources.push_back(indicator);
  AuditReport after = audit_spec(modified);

  const Violation* hit = nullptr;
  for (const Violation& v : after.violations)
    if (v.rule == "LAW2-INDICATOR") hit = &v;
  if (after.verdict != AuditVerdict::non_learning || hit == nullptr)
    throw std::logic_error("adding an indicator source must trip LAW2-INDICATOR");

  std::string base_kinds;
  for (std::size_t i = 0; i < base_spec.sources.size(); ++i) {
    if (i) base_kinds += ";";
    base_kinds += kind_name(base_spec.sources[i].kind);
  }

  DemoReport report;
  report.id = "indicator";
  report.inputs = {
      {"spec-name", base_spec.name},
      {"base-sources", base_kinds},
  };
  report.results = {
      {"before-verdict", audit_verdict_name(before.verdict)},
      {"after-verdict", audit_verdict_name(after.verdict)},
      {"rule", hit->rule},
      {"indicator-cardinality", "2"},
      {"indicator-detail", indicator.detail},
  };
  report.narrative.push_back("base spec '" + base_spec.name +
                             "' audits as learning-candidate with no violations");
  report.narrative.push_back(
      "adding one indicator-set source of cardinality 2 (cup, dog) flips the verdict to "
      "non-learning");
  report.narrative.push_back("the violated rule is " + hit->rule +
                             "; the added indicator alone caused the flip");
  finish(report);
  return report;
}

}  // namespace maplaw
