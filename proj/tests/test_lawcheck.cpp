#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "maplaw/corpus.hpp"
#include "maplaw/lawcheck.hpp"

#include "test_support.hpp"

#include <set>
#include <string>
#include <vector>

using namespace maplaw;
using test_support::rat;
using test_support::scalar_concept;
using test_support::sm;

namespace {

// Independent oracle: a mapping with at least two points keeps concepts
// distinguishable iff no two domain points share an image.
bool injective_oracle(const FiniteMapping& m) {
  std::set<std::string> images;
  for (const auto& [x, y] : m.table()) images.insert(canonical_key(y));
  return images.size() == m.size();
}

// Manual re-check of a witness, written against the definition rather
// than the library helper: x_s is a nonempty proper domain subset whose
// image equals the full range.
bool witness_oracle(const FiniteMapping& m, const BlackHoleWitness& w) {
  if (w.x_s.members.empty() || w.x_s.members.size() >= m.size()) return false;
  std::set<std::string> covered;
  for (const Point& p : w.x_s.members) {
    if (!m.in_domain(p)) return false;
    covered.insert(canonical_key(m.value_at(p)));
  }
  std::set<std::string> range;
  for (const Point& y : m.range()) range.insert(canonical_key(y));
  return covered == range;
}

}  // namespace

TEST_CASE("the square table on {-2,-1,1,2} collapses pairs symmetrically") {
  FiniteMapping m = sm({{-2, 4}, {-1, 1}, {1, 1}, {2, 4}});

  Law1Report fast = check_law1_fast(m);
  CHECK(fast.verdict == Law1Verdict::violates);
  CHECK(fast.method == Law1Method::fast);
  REQUIRE(fast.collisions.size() == 2);
  CHECK(fast.collisions[0] ==
        std::make_pair(scalar_point(-2), scalar_point(2)));
  CHECK(fast.collisions[1] ==
        std::make_pair(scalar_point(-1), scalar_point(1)));
  REQUIRE(fast.witness.has_value());
  // Dropping the larger half of the smallest collision leaves {-2,-1,1},
  // whose image {4,1} is already the whole range.
  CHECK(fast.witness->x_s.members ==
        std::vector<Point>{scalar_point(-2), scalar_point(-1), scalar_point(1)});
  CHECK(fast.witness->covered_range.members ==
        std::vector<Point>{scalar_point(1), scalar_point(4)});
  CHECK(verify_witness(m, *fast.witness));
  CHECK(witness_oracle(m, *fast.witness));

  Law1Report exhaustive = check_law1_exhaustive(m);
  CHECK(exhaustive.verdict == Law1Verdict::violates);
  CHECK(exhaustive.method == Law1Method::exhaustive);
  CHECK(exhaustive.collisions == fast.collisions);
  REQUIRE(exhaustive.witness.has_value());
  // First failing subset in enumeration order: {-2,-1} maps onto {4,1}.
  CHECK(exhaustive.witness->x_s.members ==
        std::vector<Point>{scalar_point(-2), scalar_point(-1)});
  CHECK(verify_witness(m, *exhaustive.witness));
  CHECK(witness_oracle(m, *exhaustive.witness));
}

TEST_CASE("injective tables satisfy; tiny tables are vacuous") {
  FiniteMapping inj = sm({{1, 10}, {2, 20}, {3, 30}});
  CHECK(check_law1_fast(inj).verdict == Law1Verdict::satisfies);
  CHECK(check_law1_exhaustive(inj).verdict == Law1Verdict::satisfies);
  CHECK(check_law1_fast(inj).collisions.empty());
  CHECK_FALSE(check_law1_fast(inj).witness.has_value());
  CHECK_FALSE(black_hole_witness(inj).has_value());

  FiniteMapping single = sm({{1, 10}});
  CHECK(check_law1_fast(single).verdict == Law1Verdict::vacuous);
  CHECK(check_law1_exhaustive(single).verdict == Law1Verdict::vacuous);
}

TEST_CASE("named collapse scenarios all fail both checkers") {
  struct Scenario {
    const char* name;
    FiniteMapping m;
  };
  const std::vector<Scenario> scenarios = {
      // every point lands on one value
      {"total-collapse", sm({{1, 7}, {2, 7}, {3, 7}, {4, 7}})},
      // two disjoint domain concepts with the same image set
      {"identical-images", sm({{1, 10}, {2, 20}, {3, 10}, {4, 20}})},
      // one concept's image nested inside another's
      {"nested-images", sm({{1, 10}, {2, 20}, {5, 30}, {3, 10}, {4, 20}})},
      // images overlap in a single shared value
      {"overlapping-images", sm({{1, 10}, {2, 20}, {3, 20}, {4, 30}})},
  };
  for (const Scenario& s : scenarios) {
    CAPTURE(s.name);
    Law1Report fast = check_law1_fast(s.m);
    Law1Report exhaustive = check_law1_exhaustive(s.m);
    CHECK(fast.verdict == Law1Verdict::violates);
    CHECK(exhaustive.verdict == Law1Verdict::violates);
    REQUIRE(fast.witness.has_value());
    REQUIRE(exhaustive.witness.has_value());
    CHECK(witness_oracle(s.m, *fast.witness));
    CHECK(witness_oracle(s.m, *exhaustive.witness));
    CHECK_FALSE(fast.collisions.empty());
  }

  // total-collapse pairs anchor at the smallest preimage
  Law1Report collapse = check_law1_fast(scenarios[0].m);
  REQUIRE(collapse.collisions.size() == 3);
  for (const auto& [a, b] : collapse.collisions) CHECK(a == scalar_point(1));

  // overlapping-images has exactly one colliding pair
  Law1Report overlap = check_law1_fast(scenarios[3].m);
  REQUIRE(overlap.collisions.size() == 1);
  CHECK(overlap.collisions[0] == std::make_pair(scalar_point(2), scalar_point(3)));
}

TEST_CASE("fast and exhaustive verdicts agree across a random corpus") {
  Rng rng(99);
  int violating = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t size = 2 + rng.below(9);
    // Tight magnitude so collisions appear often.
    FiniteMapping m = random_mapping(rng, size, 6);
    Law1Report fast = check_law1_fast(m);
    Law1Report exhaustive = check_law1_exhaustive(m);
    CAPTURE(trial);
    CHECK(fast.verdict == exhaustive.verdict);
    CHECK((fast.verdict == Law1Verdict::satisfies) == injective_oracle(m));
    CHECK(fast.collisions.empty() == (fast.verdict == Law1Verdict::satisfies));
    if (fast.verdict == Law1Verdict::violates) {
      ++violating;
      REQUIRE(fast.witness.has_value());
      REQUIRE(exhaustive.witness.has_value());
      CHECK(witness_oracle(m, *fast.witness));
      CHECK(witness_oracle(m, *exhaustive.witness));
    }
  }
  // The corpus must actually exercise both outcomes.
  CHECK(violating > 30);
  CHECK(violating < 300);
}

TEST_CASE("the exhaustive guard rejects oversized domains") {
  std::vector<std::pair<Rational, Rational>> pairs;
  for (long long i = 0; i < 21; ++i) pairs.emplace_back(i, i);
  FiniteMapping big = mapping_from_scalars(pairs);
  CHECK_RAISES(domain_too_large, check_law1_exhaustive(big));
  CHECK_RAISES(domain_too_large, check_law1_exhaustive(sm({{1, 1}, {2, 2}, {3, 3}}), 2));
  // The fast check has no such guard.
  CHECK(check_law1_fast(big).verdict == Law1Verdict::satisfies);
}

TEST_CASE("float mode collides nearby images that exact mode separates") {
  FiniteMapping m = mapping_from_scalars(
      {{Rational(1), Rational(0)}, {Rational(2), rat("1/1000000000000")}});

  CHECK(check_law1_fast(m).verdict == Law1Verdict::satisfies);

  Law1Options floaty{Mode::floating, 1e-9};
  Law1Report report = check_law1_fast(m, floaty);
  CHECK(report.verdict == Law1Verdict::violates);
  REQUIRE(report.collisions.size() == 1);
  CHECK(report.collisions[0] == std::make_pair(scalar_point(1), scalar_point(2)));
  REQUIRE(report.witness.has_value());
  CHECK(verify_witness(m, *report.witness, floaty));

  Law1Options tight{Mode::floating, 1e-15};
  CHECK(check_law1_fast(m, tight).verdict == Law1Verdict::satisfies);
}

TEST_CASE("tolerance equality is not transitive and pairs stay individual") {
  // images 0, 8e-10, 16e-10: adjacent pairs collide at eps 1e-9, the
  // outer pair does not.
  FiniteMapping m = mapping_from_scalars({{Rational(1), Rational(0)},
                                          {Rational(2), rat("8/10000000000")},
                                          {Rational(3), rat("16/10000000000")}});
  Law1Options floaty{Mode::floating, 1e-9};
  Law1Report report = check_law1_fast(m, floaty);
  CHECK(report.verdict == Law1Verdict::violates);
  REQUIRE(report.collisions.size() == 2);
  CHECK(report.collisions[0] == std::make_pair(scalar_point(1), scalar_point(2)));
  CHECK(report.collisions[1] == std::make_pair(scalar_point(2), scalar_point(3)));
}

TEST_CASE("verify_witness rejects sets that are not black holes") {
  FiniteMapping m = sm({{-2, 4}, {-1, 1}, {1, 1}, {2, 4}});

  // Image {4} does not cover the range.
  BlackHoleWitness narrow{scalar_concept("w", Side::domain_side, {-2}),
                          scalar_concept("c", Side::range_side, {4})};
  CHECK_FALSE(verify_witness(m, narrow));

  // Full domain is not a proper subset.
  BlackHoleWitness full{scalar_concept("w", Side::domain_side, {-2, -1, 1, 2}),
                        scalar_concept("c", Side::range_side, {1, 4})};
  CHECK_FALSE(verify_witness(m, full));

  // Covered set inconsistent with the actual image.
  BlackHoleWitness lying{scalar_concept("w", Side::domain_side, {-2, -1, 1}),
                         scalar_concept("c", Side::range_side, {1})};
  CHECK_FALSE(verify_witness(m, lying));

  // Points outside the domain.
  BlackHoleWitness stranger{scalar_concept("w", Side::domain_side, {9}),
                            scalar_concept("c", Side::range_side, {1, 4})};
  CHECK_FALSE(verify_witness(m, stranger));
}
