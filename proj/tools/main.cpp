#include "CLI11.hpp"

#include "maplaw/audit.hpp"
#include "maplaw/corpus.hpp"
#include "maplaw/errors.hpp"
#include "maplaw/harvest.hpp"
#include "maplaw/hyperplane.hpp"
#include "maplaw/lawcheck.hpp"
#include "maplaw/phenomena.hpp"
#include "maplaw/relation.hpp"
#include "maplaw/serialize.hpp"

#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace maplaw;

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInputError = 2;

struct Opts {
  std::string mode = "exact";
  double tolerance = kDefaultTolerance;
  bool tolerance_given = false;

  std::string mapping_path;
  std::string second_path;
  std::string third_path;
  std::string out_path;
  std::string out_dir = ".";
  bool exhaustive = false;
  std::size_t max_exhaustive = kDefaultMaxExhaustiveDomain;

  std::string point_text;
  std::size_t k = 2;
  std::size_t axis = 0;
  std::string direction_text;
  std::size_t perceptron_cap = 20000;
  std::size_t exact_limit = 120;

  std::string function_name = "square";
  std::string full_grid_text;
  std::string shrunk_grid_text;

  std::uint64_t seed = 1;
  std::size_t count = 10;
  std::size_t size = 8;
  long long magnitude = 50;
  bool injective = false;
};

Mode resolve_mode(const Opts& opts) {
  std::optional<Mode> mode = mode_from_name(opts.mode);
  if (!mode)
    raise(Errc::invalid_argument,
          "mode must be exact or float (check MAPLAW_MODE), got '" + opts.mode + "'");
  if (opts.tolerance_given && *mode == Mode::exact)
    raise(Errc::invalid_argument, "--tolerance is only meaningful with --mode float");
  return *mode;
}

Law1Options law_options(const Opts& opts) {
  Law1Options options;
  options.mode = resolve_mode(opts);
  options.tolerance = opts.tolerance;
  return options;
}

std::vector<Rational> parse_rational_list(const std::string& text, const std::string& what) {
  std::vector<Rational> values;
  std::string current;
  auto flush = [&] {
    if (current.empty()) raise(Errc::parse_error, what + ": empty coordinate");
    values.push_back(parse_rational(current));
    current.clear();
  };
  for (char c : text) {
    if (c == ',')
      flush();
    else if (c != ' ')
      current.push_back(c);
  }
  flush();
  return values;
}

// "lo..hi:step", all three rational.
GridSpec parse_grid(const std::string& text, const std::string& what) {
  auto dots = text.find("..");
  auto colon = text.rfind(':');
  if (dots == std::string::npos || colon == std::string::npos || colon < dots)
    raise(Errc::parse_error, what + ": expected lo..hi:step, got '" + text + "'");
  GridSpec grid;
  grid.lo = parse_rational(text.substr(0, dots));
  grid.hi = parse_rational(text.substr(dots + 2, colon - dots - 2));
  grid.step = parse_rational(text.substr(colon + 1));
  return grid;
}

void write_report(const std::string& path, const std::string& body) {
  if (path.empty()) return;
  save_text_file(path, body);
  std::cout << "report written to " << path << "\n";
}

int run_check(const Opts& opts) {
  FiniteMapping m = load_mapping_file(opts.mapping_path);
  Law1Report report;
  if (opts.exhaustive) {
    if (opts.max_exhaustive < 2)
      raise(Errc::invalid_argument, "--max-exhaustive must be at least 2");
    if (resolve_mode(opts) == Mode::floating)
      raise(Errc::invalid_argument, "the exhaustive check runs in exact mode only");
    report = check_law1_exhaustive(m, opts.max_exhaustive);
  } else {
    report = check_law1_fast(m, law_options(opts));
  }
  write_report(opts.out_path, law1_report_to_json(report));

  std::cout << "verdict: " << law1_verdict_name(report.verdict) << " ("
            << law1_method_name(report.method) << ")\n";
  if (!report.collisions.empty()) {
    std::cout << "collisions: " << report.collisions.size() << "; smallest pair "
              << display(report.collisions.front().first) << " ~ "
              << display(report.collisions.front().second) << "\n";
  }
  if (report.witness) {
    std::cout << "witness: " << report.witness->x_s.members.size()
              << " domain points already cover the whole range\n";
  }
  return report.verdict == Law1Verdict::violates ? kExitViolation : kExitPass;
}

int run_harvest_build(const Opts& opts) {
  HarvestFunction h = load_harvest_file(opts.mapping_path);
  write_report(opts.out_path, harvest_to_json(h));
  std::cout << "harvest with " << h.pieces().size() << " pieces, fingerprint "
            << h.fingerprint() << "\n";
  return kExitPass;
}

int run_harvest_eval(const Opts& opts) {
  HarvestFunction h = load_harvest_file(opts.mapping_path);
  Point y(parse_rational_list(opts.point_text, "--point"));
  Rational level = harvest_eval(h, y);
  std::cout << "level: " << to_string(level) << "\n";
  return kExitPass;
}

int run_compose(const Opts& opts) {
  FiniteMapping m = load_mapping_file(opts.mapping_path);
  HarvestFunction h = load_harvest_file(opts.second_path);
  FiniteMapping composed = compose_with_harvest(m, h);
  write_report(opts.out_path, mapping_to_json(composed));
  std::cout << "composed mapping with " << composed.size() << " pairs into "
            << composed.range().size() << " levels\n";
  return kExitPass;
}

int run_hyperplane_build(const Opts& opts) {
  FiniteMapping m = load_mapping_file(opts.mapping_path);
  HarvestFunction h = load_harvest_file(opts.second_path);
  HyperplaneOptions options;
  options.k = opts.k;
  options.axis = opts.axis;
  options.mode = resolve_mode(opts);
  if (!opts.direction_text.empty()) {
    std::vector<double> direction;
    for (const Rational& r : parse_rational_list(opts.direction_text, "--direction"))
      direction.push_back(to_double(r));
    options.direction = std::move(direction);
  }
  HyperplaneBundle bundle = to_hyperplane_form(m, h, options);
  write_report(opts.out_path, bundle_to_json(bundle));
  std::cout << "embedded " << bundle.embedding.table.size() << " points onto "
            << bundle.vector_set.levels.size() << " parallel hyperplanes in R^"
            << bundle.vector_set.dim() << "\n";
  return kExitPass;
}

int run_separability(const Opts& opts) {
  std::vector<ConceptSet> groups = load_groups_file(opts.mapping_path, Side::range_side);
  SeparabilityOptions options;
  options.perceptron_cap = opts.perceptron_cap;
  options.exact_limit = opts.exact_limit;
  SeparabilityReport report = check_linear_separability(groups, options);
  write_report(opts.out_path, separability_report_to_json(report));

  std::size_t separable = 0;
  for (const PairResult& pr : report.pairs)
    if (pr.verdict == PairVerdict::separable) ++separable;
  std::cout << "pairs: " << report.pairs.size() << "; separable: " << separable << "\n";
  for (const PairResult& pr : report.pairs) {
    std::cout << "  (" << groups[pr.group_a].name << ", " << groups[pr.group_b].name
              << "): " << pair_verdict_name(pr.verdict) << " [" << pr.certificate << "]\n";
  }
  return separable == report.pairs.size() ? kExitPass : kExitViolation;
}

int run_audit(const Opts& opts) {
  HypothesisSpec spec = load_spec_file(opts.mapping_path);
  AuditReport report = audit_spec(spec);
  write_report(opts.out_path, audit_report_to_json(report));

  std::cout << "spec '" << report.spec_name << "': " << audit_verdict_name(report.verdict)
            << "\n";
  for (const Violation& v : report.violations)
    std::cout << "  violation " << v.rule << " (source " << v.source_index << "): "
              << v.explanation << "\n";
  for (const AuditWarning& w : report.warnings)
    std::cout << "  warning " << w.rule << ": " << w.explanation << "\n";
  return report.verdict == AuditVerdict::learning_candidate ? kExitPass : kExitViolation;
}

int write_demo(const DemoReport& report, const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  std::string base = out_dir + "/demo-" + report.id + "-" + report.input_hash;
  save_text_file(base + ".json", demo_report_to_json(report));
  save_text_file(base + ".txt", demo_report_to_text(report));
  std::cout << "report written to " << base << ".json\n";
  for (const std::string& line : report.narrative) std::cout << line << "\n";
  return kExitPass;
}

int run_demo_normalization(const Opts& opts) {
  CatalogFunction f = catalog_from_name(opts.function_name);
  GridSpec full = parse_grid(opts.full_grid_text, "--full");
  GridSpec shrunk = parse_grid(opts.shrunk_grid_text, "--shrunk");
  return write_demo(demo_normalization(f, full, shrunk), opts.out_dir);
}

int run_demo_merge_split(const Opts& opts) {
  FiniteMapping m = load_mapping_file(opts.mapping_path);
  std::vector<ConceptSet> part_a = load_groups_file(opts.second_path, Side::range_side);
  std::vector<ConceptSet> part_b = load_groups_file(opts.third_path, Side::range_side);
  return write_demo(demo_merge_split(m, part_a, part_b), opts.out_dir);
}

int run_demo_indicator(const Opts& opts) {
  HypothesisSpec spec = load_spec_file(opts.mapping_path);
  return write_demo(demo_indicator(spec), opts.out_dir);
}

int run_classify(const Opts& opts, bool homologous) {
  FiniteMapping lower = load_mapping_file(opts.mapping_path);
  FiniteMapping higher = load_mapping_file(opts.second_path);
  bool verdict = homologous ? is_homologous_global(lower, higher)
                            : is_first_order_global(lower, higher);
  std::cout << (homologous ? "homologous" : "first-order") << ": "
            << (verdict ? "true" : "false") << "\n";
  return verdict ? kExitPass : kExitViolation;
}

int run_gen_corpus(const Opts& opts) {
  CorpusSpec spec;
  spec.seed = opts.seed;
  spec.count = opts.count;
  spec.size = opts.size;
  spec.magnitude = opts.magnitude;
  spec.injective = opts.injective;
  std::vector<FiniteMapping> corpus = generate_corpus(spec);
  std::filesystem::create_directories(opts.out_dir);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    std::string path = opts.out_dir + "/corpus-" + std::to_string(spec.seed) + "-" +
                       std::to_string(i) + ".json";
    save_text_file(path, mapping_to_json(corpus[i]));
  }
  std::cout << "wrote " << corpus.size() << " mappings to " << opts.out_dir << "\n";
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite mapping distinguishability toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "maplaw 0.1.0");

  Opts opts;
  if (const char* env_mode = std::getenv("MAPLAW_MODE")) opts.mode = env_mode;

  app.add_option("--mode", opts.mode, "comparison mode: exact or float")
      ->check(CLI::IsMember({"exact", "float"}))
      ->capture_default_str();
  auto* tol = app.add_option("--tolerance", opts.tolerance,
                             "point collision tolerance (float mode only)");

  std::function<int()> run;

  auto* check = app.add_subcommand("check", "decide distinguishability for a mapping file");
  check->fallthrough();
  check->add_option("mapping", opts.mapping_path, "mapping file (.csv or .json)")
      ->required()
      ->check(CLI::ExistingFile);
  check->add_flag("--exhaustive", opts.exhaustive, "quantify over all subsets (guarded)");
  check->add_option("--max-exhaustive", opts.max_exhaustive,
                    "domain size guard for --exhaustive")
      ->check(CLI::Range(std::size_t{2}, std::size_t{63}));
  check->add_option("--out", opts.out_path, "write the JSON report here");
  check->callback([&] { run = [&] { return run_check(opts); }; });

  auto* harvest = app.add_subcommand("harvest", "build or evaluate level assignments");
  harvest->require_subcommand(1);
  auto* hbuild = harvest->add_subcommand("build", "build from a concept-group file");
  hbuild->fallthrough();
  hbuild->add_option("concepts", opts.mapping_path, "harvest or concept-group JSON")
      ->required()
      ->check(CLI::ExistingFile);
  hbuild->add_option("--out", opts.out_path, "write the harvest JSON here");
  hbuild->callback([&] { run = [&] { return run_harvest_build(opts); }; });
  auto* heval = harvest->add_subcommand("eval", "evaluate the level of one range point");
  heval->fallthrough();
  heval->add_option("harvest", opts.mapping_path, "harvest JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  heval->add_option("--point", opts.point_text, "comma-separated rational coordinates")
      ->required();
  heval->callback([&] { run = [&] { return run_harvest_eval(opts); }; });

  auto* compose = app.add_subcommand("compose", "compose a mapping with a harvest");
  compose->fallthrough();
  compose->add_option("mapping", opts.mapping_path, "mapping file")
      ->required()
      ->check(CLI::ExistingFile);
  compose->add_option("harvest", opts.second_path, "harvest JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  compose->add_option("--out", opts.out_path, "write the composed mapping here");
  compose->callback([&] { run = [&] { return run_compose(opts); }; });

  auto* hyper = app.add_subcommand("hyperplane", "embeddings onto parallel hyperplanes");
  hyper->require_subcommand(1);
  auto* hpbuild = hyper->add_subcommand("build", "embed a mapping's levels into R^k");
  hpbuild->fallthrough();
  hpbuild->add_option("mapping", opts.mapping_path, "mapping file")
      ->required()
      ->check(CLI::ExistingFile);
  hpbuild->add_option("harvest", opts.second_path, "harvest JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  hpbuild->add_option("--k", opts.k, "embedding dimension")->check(CLI::PositiveNumber);
  hpbuild->add_option("--axis", opts.axis, "basis axis used as direction (exact mode)");
  hpbuild->add_option("--direction", opts.direction_text,
                      "comma-separated direction (float mode, normalized)");
  hpbuild->add_option("--out", opts.out_path, "write the bundle JSON here");
  hpbuild->callback([&] { run = [&] { return run_hyperplane_build(opts); }; });
  auto* hpsep = hyper->add_subcommand("separability", "pairwise strict linear separability");
  hpsep->fallthrough();
  hpsep->add_option("groups", opts.mapping_path, "concept-group JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  hpsep->add_option("--perceptron-cap", opts.perceptron_cap, "update budget for the fast path");
  hpsep->add_option("--exact-limit", opts.exact_limit, "max points for the exact fallback");
  hpsep->add_option("--out", opts.out_path, "write the report JSON here");
  hpsep->callback([&] { run = [&] { return run_separability(opts); }; });

  auto* audit = app.add_subcommand("audit", "provenance audit of a model construction spec");
  audit->fallthrough();
  audit->add_option("spec", opts.mapping_path, "spec file (.toml or .json)")
      ->required()
      ->check(CLI::ExistingFile);
  audit->add_option("--out", opts.out_path, "write the report JSON here");
  audit->callback([&] { run = [&] { return run_audit(opts); }; });

  auto* demo = app.add_subcommand("demo", "scripted deterministic demonstrations");
  demo->require_subcommand(1);
  auto* dnorm = demo->add_subcommand("normalization",
                                     "restrict a catalog function's domain and re-check");
  dnorm->fallthrough();
  dnorm->add_option("--function", opts.function_name,
                    "identity, square, absolute-value, or sine-bhaskara")
      ->capture_default_str();
  dnorm->add_option("--full", opts.full_grid_text, "full grid lo..hi:step")->required();
  dnorm->add_option("--shrunk", opts.shrunk_grid_text, "shrunk grid lo..hi:step")->required();
  dnorm->add_option("--out-dir", opts.out_dir, "directory for report files");
  dnorm->callback([&] { run = [&] { return run_demo_normalization(opts); }; });
  auto* dmerge = demo->add_subcommand("merge-split", "re-partition a mapping's range");
  dmerge->fallthrough();
  dmerge->add_option("mapping", opts.mapping_path, "mapping file")
      ->required()
      ->check(CLI::ExistingFile);
  dmerge->add_option("partition_a", opts.second_path, "first partition (groups JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  dmerge->add_option("partition_b", opts.third_path, "second partition (groups JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  dmerge->add_option("--out-dir", opts.out_dir, "directory for report files");
  dmerge->callback([&] { run = [&] { return run_demo_merge_split(opts); }; });
  auto* dind = demo->add_subcommand("indicator", "add an indicator source and re-audit");
  dind->fallthrough();
  dind->add_option("spec", opts.mapping_path, "base spec file (.toml or .json)")
      ->required()
      ->check(CLI::ExistingFile);
  dind->add_option("--out-dir", opts.out_dir, "directory for report files");
  dind->callback([&] { run = [&] { return run_demo_indicator(opts); }; });

  auto* classify = app.add_subcommand("classify", "relate two mappings' information");
  classify->require_subcommand(1);
  auto* chom = classify->add_subcommand(
      "homologous", "lower's domain and range both sit inside higher's domain");
  chom->fallthrough();
  chom->add_option("lower", opts.mapping_path, "lower mapping file")
      ->required()
      ->check(CLI::ExistingFile);
  chom->add_option("higher", opts.second_path, "higher mapping file")
      ->required()
      ->check(CLI::ExistingFile);
  chom->callback([&] { run = [&] { return run_classify(opts, true); }; });
  auto* cfirst = classify->add_subcommand("first-order",
                                          "lower's range sits inside higher's domain");
  cfirst->fallthrough();
  cfirst->add_option("lower", opts.mapping_path, "lower mapping file")
      ->required()
      ->check(CLI::ExistingFile);
  cfirst->add_option("higher", opts.second_path, "higher mapping file")
      ->required()
      ->check(CLI::ExistingFile);
  cfirst->callback([&] { run = [&] { return run_classify(opts, false); }; });

  auto* gen = app.add_subcommand("gen", "generate reproducible test inputs");
  gen->require_subcommand(1);
  auto* gcorpus = gen->add_subcommand("corpus", "seeded random mapping files");
  gcorpus->fallthrough();
  gcorpus->add_option("--seed", opts.seed, "generator seed")->capture_default_str();
  gcorpus->add_option("--count", opts.count, "number of mappings")->capture_default_str();
  gcorpus->add_option("--size", opts.size, "domain points per mapping")->capture_default_str();
  gcorpus->add_option("--magnitude", opts.magnitude, "coordinate bound")->capture_default_str();
  gcorpus->add_flag("--injective", opts.injective, "draw distinct images too");
  gcorpus->add_option("--out-dir", opts.out_dir, "directory for mapping files");
  gcorpus->callback([&] { run = [&] { return run_gen_corpus(opts); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }
  opts.tolerance_given = tol->count() > 0;

  try {
    return run ? run() : kExitInputError;
  } catch (const Error& e) {
    std::cerr << "error [" << errc_name(e.code()) << "]: " << e.what() << "\n";
    // A mapping that fails the distinguishability precondition is a
    // verdict, not a malformed input.
    return e.code() == Errc::law1_violation ? kExitViolation : kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}
