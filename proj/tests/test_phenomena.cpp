#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "maplaw/lawcheck.hpp"
#include "maplaw/phenomena.hpp"
#include "maplaw/serialize.hpp"

#include "test_support.hpp"

#include <cmath>
#include <string>
#include <vector>

using namespace maplaw;
using test_support::rat;
using test_support::scalar_concept;
using test_support::sm;

namespace {

GridSpec grid(const char* lo, const char* hi, const char* step) {
  return GridSpec{rat(lo), rat(hi), rat(step)};
}

std::string result_of(const DemoReport& report, const std::string& key) {
  for (const auto& [k, v] : report.results) {
    if (k == key) return v;
  }
  FAIL("missing result key: " << key);
  return "";
}

}  // namespace

TEST_CASE("catalog names round-trip and evaluation is exact") {
  CHECK(catalog_from_name("identity") == CatalogFunction::identity);
  CHECK(catalog_from_name("square") == CatalogFunction::square);
  CHECK(catalog_from_name("absolute-value") == CatalogFunction::absolute_value);
  CHECK(catalog_from_name("sine-bhaskara") == CatalogFunction::sine_bhaskara);
  CHECK_RAISES(invalid_argument, catalog_from_name("cube"));

  CHECK(eval_catalog(CatalogFunction::identity, rat("-7/3")) == rat("-7/3"));
  CHECK(eval_catalog(CatalogFunction::square, rat("-3/2")) == rat("9/4"));
  CHECK(eval_catalog(CatalogFunction::absolute_value, rat("-5")) == Rational(5));
  CHECK(eval_catalog(CatalogFunction::absolute_value, Rational(5)) == Rational(5));
}

TEST_CASE("the rational sine peaks at one and vanishes at the period ends") {
  // g(t) = 16 t (P - t) / (5 P^2 - 4 t (P - t)) with P = 22/7.
  const Rational P = rat("22/7");
  CHECK(eval_catalog(CatalogFunction::sine_bhaskara, Rational(0)) == Rational(0));
  CHECK(eval_catalog(CatalogFunction::sine_bhaskara, P) == Rational(0));
  CHECK(eval_catalog(CatalogFunction::sine_bhaskara, P / 2) == Rational(1));

  // Half-period symmetry g(t) == g(P - t) makes collisions exact.
  for (const char* t_text : {"1/7", "1/2", "1", "3/2", "2"}) {
    const Rational t = rat(t_text);
    CHECK(eval_catalog(CatalogFunction::sine_bhaskara, t) ==
          eval_catalog(CatalogFunction::sine_bhaskara, P - t));
  }
}

TEST_CASE("the rational sine tracks the transcendental one closely") {
  // Within the classical uniform error bound of the approximant.
  const double P = 22.0 / 7.0;
  for (int i = 0; i <= 44; ++i) {
    const Rational t = Rational(i) / 14;  // 0 to 22/7 in small steps
    const double approx = to_double(eval_catalog(CatalogFunction::sine_bhaskara, t));
    const double exact = std::sin(to_double(t) * (std::acos(-1.0) / P));
    CHECK(std::abs(approx - exact) < 0.0025);
  }
}

TEST_CASE("grids are inclusive and validated") {
  std::vector<Rational> points = grid_points(grid("-1", "1", "1/2"));
  CHECK(points == std::vector<Rational>{rat("-1"), rat("-1/2"), Rational(0), rat("1/2"),
                                        Rational(1)});
  // hi not on the lattice: stop below it.
  CHECK(grid_points(grid("0", "5/4", "1/2")).size() == 3);
  CHECK_RAISES(invalid_argument, grid_points(grid("0", "1", "0")));
  CHECK_RAISES(invalid_argument, grid_points(grid("0", "1", "-1")));
  CHECK_RAISES(empty_grid, grid_points(grid("1", "0", "1/2")));
}

TEST_CASE("catalog mappings tabulate the function over the grid") {
  FiniteMapping m = mapping_from_catalog(CatalogFunction::square, grid("-2", "2", "1"));
  CHECK(m.size() == 5);
  CHECK(m.value_at(scalar_point(-2)) == scalar_point(4));
  CHECK(m.value_at(scalar_point(0)) == scalar_point(0));
  CHECK(check_law1_fast(m).verdict == Law1Verdict::violates);
}

TEST_CASE("domain restriction recovers distinguishability for the square") {
  DemoReport report =
      demo_normalization(CatalogFunction::square, grid("-5", "5", "1"), grid("1", "5", "1"));
  CHECK(report.id == "normalization");
  CHECK(result_of(report, "before-verdict") == "violates");
  CHECK(result_of(report, "after-verdict") == "satisfies");
  CHECK(result_of(report, "outputs-agree-on-overlap") == "true");
  CHECK(result_of(report, "overlap-points") == "5");
  CHECK_FALSE(report.narrative.empty());
  CHECK_FALSE(report.input_hash.empty());
}

TEST_CASE("the identity control keeps satisfying through the shrink") {
  DemoReport report = demo_normalization(CatalogFunction::identity, grid("-5", "5", "1"),
                                         grid("1", "5", "1"));
  CHECK(result_of(report, "before-verdict") == "satisfies");
  CHECK(result_of(report, "after-verdict") == "satisfies");
  CHECK(result_of(report, "outputs-agree-on-overlap") == "true");
}

TEST_CASE("the absolute value loses its mirror collisions on the right half") {
  DemoReport report = demo_normalization(CatalogFunction::absolute_value,
                                         grid("-3", "3", "1"), grid("0", "3", "1"));
  CHECK(result_of(report, "before-verdict") == "violates");
  CHECK(result_of(report, "after-verdict") == "satisfies");
}

TEST_CASE("normalization demos are deterministic byte for byte") {
  DemoReport first =
      demo_normalization(CatalogFunction::square, grid("-5", "5", "1"), grid("1", "5", "1"));
  DemoReport second =
      demo_normalization(CatalogFunction::square, grid("-5", "5", "1"), grid("1", "5", "1"));
  CHECK(first.input_hash == second.input_hash);
  CHECK(demo_report_to_json(first) == demo_report_to_json(second));
  CHECK(demo_report_to_text(first) == demo_report_to_text(second));

  // Different inputs change the hash, so report files never collide.
  DemoReport other =
      demo_normalization(CatalogFunction::square, grid("-5", "5", "1"), grid("2", "5", "1"));
  CHECK(first.input_hash != other.input_hash);
}

TEST_CASE("merging levels is reported as a coarsening with its changed points") {
  FiniteMapping m = sm({{1, 10}, {2, 20}, {3, 30}, {4, 40}, {5, 50}, {6, 60}});
  std::vector<ConceptSet> fine = {scalar_concept("a", Side::range_side, {10, 20}),
                                  scalar_concept("b", Side::range_side, {30, 40}),
                                  scalar_concept("c", Side::range_side, {50, 60})};
  std::vector<ConceptSet> coarse = {scalar_concept("ab", Side::range_side, {10, 20, 30, 40}),
                                    scalar_concept("c", Side::range_side, {50, 60})};

  DemoReport report = demo_merge_split(m, fine, coarse);
  CHECK(report.id == "merge-split");
  CHECK(result_of(report, "relation") == "coarsening");
  CHECK(result_of(report, "pieces-a") == "3");
  CHECK(result_of(report, "pieces-b") == "2");
  CHECK(result_of(report, "changed-count") == "4");

  // The reverse direction is a refinement with the same changed set.
  DemoReport reverse = demo_merge_split(m, coarse, fine);
  CHECK(result_of(reverse, "relation") == "refinement");
  CHECK(result_of(reverse, "changed-count") == "4");

  // Identical partitions change nothing.
  DemoReport unchanged = demo_merge_split(m, fine, fine);
  CHECK(result_of(unchanged, "relation") == "identical");
  CHECK(result_of(unchanged, "changed-count") == "0");

  // Determinism.
  CHECK(demo_report_to_json(report) == demo_report_to_json(demo_merge_split(m, fine, coarse)));
}

TEST_CASE("merge-split validates partitions and their relation") {
  FiniteMapping m = sm({{1, 10}, {2, 20}, {3, 30}});
  std::vector<ConceptSet> good = {scalar_concept("all", Side::range_side, {10, 20, 30})};

  // Not covering the range.
  CHECK_RAISES(not_a_partition,
               demo_merge_split(m, {scalar_concept("partial", Side::range_side, {10})}, good));
  // A point outside the range.
  CHECK_RAISES(not_a_partition,
               demo_merge_split(m, {scalar_concept("alien", Side::range_side, {10, 20, 30, 99})},
                                good));
  // Overlapping pieces.
  CHECK_RAISES(not_a_partition,
               demo_merge_split(m,
                                {scalar_concept("x", Side::range_side, {10, 20}),
                                 scalar_concept("y", Side::range_side, {20, 30})},
                                good));
  // Domain-side pieces.
  CHECK_RAISES(not_a_partition,
               demo_merge_split(m, {scalar_concept("flipped", Side::domain_side, {10, 20, 30})},
                                good));
  // Crossing partitions that neither coarsen nor refine.
  FiniteMapping wide = sm({{1, 10}, {2, 20}, {3, 30}, {4, 40}});
  CHECK_RAISES(not_a_refinement,
               demo_merge_split(wide,
                                {scalar_concept("left", Side::range_side, {10, 20}),
                                 scalar_concept("right", Side::range_side, {30, 40})},
                                {scalar_concept("odd", Side::range_side, {10, 30}),
                                 scalar_concept("even", Side::range_side, {20, 40})}));
}

TEST_CASE("the indicator demo flips a clean spec to non-learning") {
  HypothesisSpec base;
  base.name = "clean-base";
  base.domain.dims = 1;
  base.range.dims = 1;
  ProvenanceTag obs;
  obs.kind = SourceKind::observation_from_domain;
  base.sources = {obs};

  DemoReport report = demo_indicator(base);
  CHECK(report.id == "indicator");
  CHECK(result_of(report, "before-verdict") == "learning-candidate");
  CHECK(result_of(report, "after-verdict") == "non-learning");
  CHECK(result_of(report, "rule") == "LAW2-INDICATOR");
  CHECK(result_of(report, "indicator-cardinality") == "2");

  // Rebuilding gives the identical report.
  CHECK(demo_report_to_json(report) == demo_report_to_json(demo_indicator(base)));

  // A base spec that already violates cannot anchor the demonstration.
  HypothesisSpec dirty = base;
  ProvenanceTag indicator;
  indicator.kind = SourceKind::indicator_set;
  dirty.sources.push_back(indicator);
  CHECK_RAISES(base_spec_already_violating, demo_indicator(dirty));
}
