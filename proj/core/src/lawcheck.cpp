#include "maplaw/lawcheck.hpp"

#include "maplaw/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace maplaw {

const char* law1_verdict_name(Law1Verdict verdict) noexcept {
  switch (verdict) {
    case Law1Verdict::satisfies: return "satisfies";
    case Law1Verdict::violates: return "violates";
    case Law1Verdict::vacuous: return "vacuous";
  }
  return "unknown";
}

const char* law1_method_name(Law1Method method) noexcept {
  return method == Law1Method::exhaustive ? "exhaustive" : "fast";
}

namespace {

// All colliding domain pairs, grouped per range value, anchored at the
// lexicographically smallest preimage. Exact mode.
std::vector<std::pair<Point, Point>> collect_collisions_exact(const FiniteMapping& m) {
  std::unordered_map<std::string, std::vector<Point>> groups;
  groups.reserve(m.size());
  for (const auto& [x, y] : m.table()) groups[canonical_key(y)].push_back(x);

  std::vector<std::pair<Point, Point>> collisions;
  for (auto& [key, sources] : groups) {
    if (sources.size() < 2) continue;
    std::sort(sources.begin(), sources.end());
    for (std::size_t i = 1; i < sources.size(); ++i) {
      collisions.emplace_back(sources.front(), sources[i]);
    }
  }
  std::sort(collisions.begin(), collisions.end());
  return collisions;
}

// Float mode: any pair of domain points whose images agree within eps in
// every coordinate. Sort by image, then sweep a window over the first
// image coordinate; tolerance equality is not transitive, so pairs are
// reported individually rather than grouped.
std::vector<std::pair<Point, Point>> collect_collisions_tolerant(const FiniteMapping& m,
                                                                 double eps) {
  std::vector<std::pair<Point, Point>> ordered(m.table().begin(), m.table().end());
  std::sort(ordered.begin(), ordered.end(),
            [](const auto& a, const auto& b) { return a.second < b.second; });

  std::vector<std::pair<Point, Point>> collisions;
  for (std::size_t i = 0; i < ordered.size(); ++i) {
    const double first_i = to_double(ordered[i].second.coord(0));
    for (std::size_t j = i + 1; j < ordered.size(); ++j) {
      if (to_double(ordered[j].second.coord(0)) - first_i > eps) break;
      if (within_tolerance(ordered[i].second, ordered[j].second, eps)) {
        auto pair = std::minmax(ordered[i].first, ordered[j].first);
        collisions.emplace_back(pair.first, pair.second);
      }
    }
  }
  std::sort(collisions.begin(), collisions.end());
  collisions.erase(std::unique(collisions.begin(), collisions.end()), collisions.end());
  return collisions;
}

std::vector<std::pair<Point, Point>> collect_collisions(const FiniteMapping& m,
                                                        const Law1Options& options) {
  return options.mode == Mode::exact ? collect_collisions_exact(m)
                                     : collect_collisions_tolerant(m, options.tolerance);
}

BlackHoleWitness witness_from_collision(const FiniteMapping& m,
                                        const std::pair<Point, Point>& collision) {
  std::vector<Point> kept;
  kept.reserve(m.size() - 1);
  for (const auto& [x, y] : m.table()) {
    if (x != collision.second) kept.push_back(x);
  }
  ConceptSet x_s("black-hole-witness", Side::domain_side, std::move(kept));
  ConceptSet covered = image(m, x_s);
  covered.name = "covered-range";
  return BlackHoleWitness{std::move(x_s), std::move(covered)};
}

void check_verified(const FiniteMapping& m, const BlackHoleWitness& witness,
                    const Law1Options& options) {
  if (!verify_witness(m, witness, options)) {
    throw std::logic_error("constructed black-hole witness failed its covering re-check");
  }
}

}  // namespace

bool verify_witness(const FiniteMapping& m, const BlackHoleWitness& witness,
                    const Law1Options& options) {
  if (witness.x_s.members.empty() || witness.x_s.members.size() >= m.size()) return false;
  for (const Point& p : witness.x_s.members) {
    if (!m.in_domain(p)) return false;
  }
  const ConceptSet covered = image(m, witness.x_s);
  if (!same_members(covered, witness.covered_range)) return false;
  if (options.mode == Mode::exact) {
    return covered.members == m.range();
  }
  for (const Point& y : m.range()) {
    bool reached = false;
    for (const Point& c : covered.members) {
      if (within_tolerance(y, c, options.tolerance)) {
        reached = true;
        break;
      }
    }
    if (!reached) return false;
  }
  return true;
}

Law1Report check_law1_fast(const FiniteMapping& m, const Law1Options& options) {
  Law1Report report;
  report.method = Law1Method::fast;
  if (m.size() <= 1) {
    report.verdict = Law1Verdict::vacuous;
    return report;
  }
  report.collisions = collect_collisions(m, options);
  if (report.collisions.empty()) {
    report.verdict = Law1Verdict::satisfies;
    return report;
  }
  report.verdict = Law1Verdict::violates;
  report.witness = witness_from_collision(m, report.collisions.front());
  check_verified(m, *report.witness, options);
  return report;
}

Law1Report check_law1_exhaustive(const FiniteMapping& m, std::size_t max_domain) {
  if (m.size() > max_domain || m.size() >= 64) {
    raise(Errc::domain_too_large, "|D| = " + std::to_string(m.size()) +
                                      " exceeds the exhaustive guard of " +
                                      std::to_string(std::min<std::size_t>(max_domain, 63)) +
                                      "; use the fast check");
  }

  Law1Report report;
  report.method = Law1Method::exhaustive;
  const std::size_t d = m.size();
  if (d <= 1) {
    report.verdict = Law1Verdict::vacuous;
    return report;
  }

  // Index each domain position by the position of its image in the sorted
  // range, so subset images become bitmasks.
  const std::vector<Point> domain = m.domain();
  std::vector<std::uint64_t> image_bit(d);
  for (std::size_t i = 0; i < d; ++i) {
    const Point& y = m.value_at(domain[i]);
    const auto it = std::lower_bound(m.range().begin(), m.range().end(), y);
    image_bit[i] = std::uint64_t{1} << static_cast<std::size_t>(it - m.range().begin());
  }

  // Subsets in increasing bitmask order over the sorted domain; the first
  // failing X_S is the reported witness regardless of any internal
  // parallelism, which keeps reports deterministic.
  const std::uint64_t full = (std::uint64_t{1} << d) - 1;
  for (std::uint64_t xs = 1; xs < full; ++xs) {
    std::uint64_t ys_mask = 0;
    for (std::size_t i = 0; i < d; ++i) {
      if (xs & (std::uint64_t{1} << i)) ys_mask |= image_bit[i];
    }
    const std::uint64_t complement = full & ~xs;
    bool found_disjoint = false;
    for (std::uint64_t xn = complement; xn != 0; xn = (xn - 1) & complement) {
      std::uint64_t yn_mask = 0;
      for (std::size_t i = 0; i < d; ++i) {
        if (xn & (std::uint64_t{1} << i)) yn_mask |= image_bit[i];
      }
      if ((yn_mask & ys_mask) == 0) {
        found_disjoint = true;
        break;
      }
    }
    if (!found_disjoint) {
      std::vector<Point> members;
      for (std::size_t i = 0; i < d; ++i) {
        if (xs & (std::uint64_t{1} << i)) members.push_back(domain[i]);
      }
      ConceptSet x_s("black-hole-witness", Side::domain_side, std::move(members));
      ConceptSet covered = image(m, x_s);
      covered.name = "covered-range";
      report.verdict = Law1Verdict::violates;
      report.witness = BlackHoleWitness{std::move(x_s), std::move(covered)};
      report.collisions = collect_collisions_exact(m);
      check_verified(m, *report.witness, Law1Options{});
      return report;
    }
  }

  report.verdict = Law1Verdict::satisfies;
  return report;
}

std::optional<BlackHoleWitness> black_hole_witness(const FiniteMapping& m,
                                                   const Law1Options& options) {
  Law1Report report = check_law1_fast(m, options);
  if (report.verdict != Law1Verdict::violates) return std::nullopt;
  return std::move(report.witness);
}

}  // namespace maplaw
