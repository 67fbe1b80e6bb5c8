// Microbenchmarks for the hot paths: the two distinguishability checkers,
// piece lookup, constraint evaluation, and two-group separability.
// Inputs are deterministic (fixed seeds) so runs are comparable.

#include "maplaw/corpus.hpp"
#include "maplaw/harvest.hpp"
#include "maplaw/hyperplane.hpp"
#include "maplaw/lawcheck.hpp"
#include "maplaw/relation.hpp"

#include <benchmark/benchmark.h>

#include <cstdint>
#include <string>
#include <vector>

namespace {

using namespace maplaw;

FiniteMapping injective_mapping(std::size_t size) {
  Rng rng(1234);
  return random_injective_mapping(rng, size, static_cast<std::int64_t>(4 * size));
}

FiniteMapping collapsing_mapping(std::size_t size) {
  // Roughly half the codomain collapses: images drawn from a small pool.
  Rng rng(5678);
  std::vector<std::pair<Rational, Rational>> pairs;
  pairs.reserve(size);
  for (std::size_t i = 0; i < size; ++i) {
    pairs.emplace_back(Rational(static_cast<long>(i)),
                       Rational(static_cast<long>(rng.below(size / 2 + 1))));
  }
  return mapping_from_scalars(pairs);
}

void law1_fast_injective(benchmark::State& state) {
  const FiniteMapping m = injective_mapping(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    Law1Report report = check_law1_fast(m);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(law1_fast_injective)->Arg(8)->Arg(32)->Arg(128)->Arg(512);

void law1_fast_collapsing(benchmark::State& state) {
  const FiniteMapping m = collapsing_mapping(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    Law1Report report = check_law1_fast(m);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(law1_fast_collapsing)->Arg(8)->Arg(32)->Arg(128)->Arg(512);

void law1_exhaustive_injective(benchmark::State& state) {
  const FiniteMapping m = injective_mapping(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    Law1Report report = check_law1_exhaustive(m);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(law1_exhaustive_injective)->Arg(4)->Arg(8)->Arg(12)->Arg(16);

void harvest_lookup(benchmark::State& state) {
  const std::size_t pieces = static_cast<std::size_t>(state.range(0));
  Rng rng(24);
  const FiniteMapping m = random_injective_mapping(rng, pieces, static_cast<std::int64_t>(8 * pieces));
  std::vector<ConceptSet> concepts;
  concepts.reserve(pieces);
  for (const Point& y : m.range()) {
    concepts.push_back(ConceptSet("piece-" + std::to_string(concepts.size()), Side::range_side, {y}));
  }
  const HarvestFunction h = build_harvest(concepts);
  const std::vector<Point>& range = m.range();
  std::size_t at = 0;
  for (auto _ : state) {
    Rational level = harvest_eval(h, range[at]);
    benchmark::DoNotOptimize(level);
    at = (at + 1) % range.size();
  }
}
BENCHMARK(harvest_lookup)->Arg(4)->Arg(16)->Arg(64)->Arg(256);

void constraint_eval(benchmark::State& state) {
  Rng rng(99);
  std::vector<Rational> roots;
  for (std::int64_t i = 0; i < state.range(0); ++i) roots.push_back(random_rational(rng, 30, 7));
  const EqualityConstraint phi = build_constraint(roots, Rational(5));
  const Rational probe(17, 3);
  for (auto _ : state) {
    Rational value = eval_constraint(phi, probe);
    benchmark::DoNotOptimize(value);
  }
}
BENCHMARK(constraint_eval)->Arg(1)->Arg(4)->Arg(8);

void separability_two_groups(benchmark::State& state) {
  const std::size_t per_group = static_cast<std::size_t>(state.range(0));
  // Two planar clusters separated along the x axis.
  std::vector<Point> left, right;
  Rng rng(7);
  for (std::size_t i = 0; i < per_group; ++i) {
    left.push_back(Point({Rational(-10) + random_rational(rng, 4, 3),
                          random_rational(rng, 6, 3)}));
    right.push_back(Point({Rational(10) + random_rational(rng, 4, 3),
                           random_rational(rng, 6, 3)}));
  }
  const std::vector<ConceptSet> groups = {ConceptSet("left", Side::range_side, left),
                                          ConceptSet("right", Side::range_side, right)};
  for (auto _ : state) {
    SeparabilityReport report = check_linear_separability(groups);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(separability_two_groups)->Arg(4)->Arg(16)->Arg(64);

void embedding_build(benchmark::State& state) {
  const std::size_t size = static_cast<std::size_t>(state.range(0));
  Rng rng(31);
  const FiniteMapping m = random_injective_mapping(rng, size, static_cast<std::int64_t>(8 * size));
  std::vector<ConceptSet> concepts;
  for (const Point& y : m.range()) {
    concepts.push_back(ConceptSet("piece-" + std::to_string(concepts.size()), Side::range_side, {y}));
  }
  const HarvestFunction h = build_harvest(concepts);
  for (auto _ : state) {
    HyperplaneBundle bundle = to_hyperplane_form(m, h);
    benchmark::DoNotOptimize(bundle);
  }
}
BENCHMARK(embedding_build)->Arg(8)->Arg(32)->Arg(128);

}  // namespace

BENCHMARK_MAIN();
