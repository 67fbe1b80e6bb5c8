#pragma once

#include "maplaw/audit.hpp"
#include "maplaw/harvest.hpp"
#include "maplaw/relation.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace maplaw {

// Closed catalog of 1-D functions available to scripted demonstrations.
// Extending it is a code change; there is deliberately no expression
// parser here.
enum class CatalogFunction { identity, square, absolute_value, sine_bhaskara };

const char* catalog_name(CatalogFunction f) noexcept;
CatalogFunction catalog_from_name(std::string_view name);
// Exact on every rational input. sine_bhaskara is the rational
// approximant 16t(P-t) / (5P^2 - 4t(P-t)) with period parameter P = 22/7;
// it shares sine's half-period symmetry, so collisions are exact.
Rational eval_catalog(CatalogFunction f, const Rational& t);

struct GridSpec {
  Rational lo;
  Rational hi;
  Rational step;  // > 0
};

// lo, lo+step, ... up to hi inclusive. EmptyGrid when nothing fits.
std::vector<Rational> grid_points(const GridSpec& grid);
std::string grid_display(const GridSpec& grid);

FiniteMapping mapping_from_catalog(CatalogFunction f, const GridSpec& grid);

// Deterministic demonstration output. Rebuilding with the same inputs
// yields an identical structure; there are no timestamps. input_hash
// names the report file: demo-<id>-<input_hash>.json.
struct DemoReport {
  std::string id;
  std::string input_hash;
  std::vector<std::pair<std::string, std::string>> inputs;   // ordered key/value
  std::vector<std::pair<std::string, std::string>> results;  // ordered key/value
  std::vector<std::string> narrative;
};

// Runs the fast distinguishability check on f over both grids. The
// function is untouched; only its domain shrinks. Outputs are compared
// pointwise on the grid overlap to certify that.
DemoReport demo_normalization(CatalogFunction f, const GridSpec& full_grid,
                              const GridSpec& shrunk_grid);

// Builds default-level harvests over two partitions of m's range, where
// one partition coarsens or refines the other, and reports which range
// points changed their level-sharing structure.
DemoReport demo_merge_split(const FiniteMapping& m, const std::vector<ConceptSet>& partition_a,
                            const std::vector<ConceptSet>& partition_b);

// Clones a learning-candidate spec, adds a two-member indicator-set
// source, and audits both to show the verdict flip.
DemoReport demo_indicator(const HypothesisSpec& base_spec);

}  // namespace maplaw
