#include "maplaw/hyperplane.hpp"

#include "maplaw/errors.hpp"
#include "maplaw/lawcheck.hpp"
#include "maplaw/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace maplaw {

namespace {

Rational dot(const std::vector<Rational>& w, const Point& z) {
  Rational acc = 0;
  for (std::size_t j = 0; j < w.size(); ++j) acc += w[j] * z.coords()[j];
  return acc;
}

void validate_levels(Mode mode, const std::vector<Rational>& levels) {
  if (levels.empty()) raise(Errc::invalid_argument, "a vector set needs at least one level");
  std::vector<Rational> sorted = levels;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i] == sorted[i - 1])
      raise(Errc::duplicate_levels,
            "levels must be pairwise distinct, found " + to_string(sorted[i]) + " twice");
    if (mode == Mode::floating) {
      // Under tolerant comparison two hyperplanes closer than the collision
      // band would be indistinguishable, defeating distinctness.
      double gap = to_double(sorted[i] - sorted[i - 1]);
      if (gap <= 2.0 * kDefaultTolerance)
        raise(Errc::duplicate_levels,
              "levels " + to_string(sorted[i - 1]) + " and " + to_string(sorted[i]) +
                  " are closer than the float-mode resolution");
    }
  }
}

}  // namespace

VectorSet make_vector_set(Mode mode, std::vector<Rational> direction,
                          std::vector<Rational> levels) {
  if (direction.empty())
    raise(Errc::invalid_argument, "a vector set needs a nonzero-dimensional direction");
  if (mode == Mode::exact) {
    Rational norm_sq = 0;
    for (const Rational& d : direction) norm_sq += d * d;
    if (norm_sq != 1)
      raise(Errc::invalid_argument,
            "exact mode requires an exactly unit-norm direction, got squared norm " +
                to_string(norm_sq));
  } else {
    double norm_sq = 0.0;
    for (const Rational& d : direction) {
      double v = to_double(d);
      norm_sq += v * v;
    }
    if (std::abs(std::sqrt(norm_sq) - 1.0) > kDirectionTolerance)
      raise(Errc::invalid_argument, "float mode requires a unit-norm direction within 1e-12");
  }
  validate_levels(mode, levels);
  VectorSet vc;
  vc.mode = mode;
  vc.direction = std::move(direction);
  vc.levels = std::move(levels);
  return vc;
}

std::vector<Rational> axis_direction(std::size_t k, std::size_t axis) {
  if (k == 0) raise(Errc::invalid_argument, "embedding dimension must be at least 1");
  if (axis >= k)
    raise(Errc::invalid_argument, "axis " + std::to_string(axis) +
                                      " out of range for dimension " + std::to_string(k));
  std::vector<Rational> d(k, Rational(0));
  d[axis] = 1;
  return d;
}

std::vector<Rational> normalized_direction(const std::vector<double>& v) {
  if (v.empty()) raise(Errc::invalid_argument, "cannot normalize an empty direction");
  double norm_sq = 0.0;
  for (double x : v) norm_sq += x * x;
  double norm = std::sqrt(norm_sq);
  if (!(norm > 0.0)) raise(Errc::invalid_argument, "cannot normalize a zero direction");
  std::vector<Rational> out;
  out.reserve(v.size());
  // The normalized doubles are stored exactly, so later dot products are
  // deterministic rational arithmetic even though the direction came from
  // floating-point data.
  for (double x : v) out.emplace_back(Rational(x / norm));
  return out;
}

HyperplaneBundle to_hyperplane_form(const FiniteMapping& m, const HarvestFunction& h,
                                    const HyperplaneOptions& options) {
  Law1Report law = check_law1_fast(m);
  if (law.verdict == Law1Verdict::violates)
    raise(Errc::law1_violation,
          "mapping merges distinct inputs; hyperplane form requires an injective mapping");
  if (!h.covers(m.range()))
    raise(Errc::incomplete_cover, "harvest pieces do not cover the mapping range");

  // The direction is fixed from the options alone, before any concept is
  // read. Distinct concept sets only ever shift which parallel hyperplane
  // a point lands on, never the orientation.
  std::vector<Rational> direction;
  if (options.direction.has_value()) {
    if (options.mode == Mode::exact)
      raise(Errc::invalid_argument,
            "custom directions are a float-mode option; exact mode uses a basis axis");
    direction = normalized_direction(*options.direction);
    if (direction.size() != options.k)
      raise(Errc::dimension_mismatch, "direction has " + std::to_string(direction.size()) +
                                          " coordinates, expected " + std::to_string(options.k));
  } else {
    direction = axis_direction(options.k, options.axis);
  }

  std::vector<Rational> levels;
  levels.reserve(h.pieces().size());
  for (const auto& piece : h.pieces()) levels.push_back(piece.level);
  VectorSet vc = make_vector_set(options.mode, direction, std::move(levels));

  EmbeddingL embedding;
  embedding.mapping_id = info_type_id(m);
  embedding.harvest_id = h.fingerprint();
  embedding.table.reserve(m.size());
  for (const auto& [x, y] : m.table()) {
    Rational level = harvest_eval(h, y);
    std::vector<Rational> coords;
    coords.reserve(vc.direction.size());
    for (const Rational& d : vc.direction) coords.push_back(level * d);
    embedding.table.emplace_back(x, Point(std::move(coords)));
  }

  HyperplaneBundle bundle{std::move(vc), std::move(embedding)};
  for (const auto& [x, z] : bundle.embedding.table) {
    Rational recovered = eval_vc(bundle.vector_set, z);
    Rational expected = harvest_eval(h, m.value_at(x));
    bool ok = options.mode == Mode::exact
                  ? recovered == expected
                  : std::abs(to_double(recovered - expected)) <= kDefaultTolerance;
    if (!ok) throw std::logic_error("hyperplane embedding failed to reproduce its level");
  }
  return bundle;
}

Rational eval_vc(const VectorSet& vc, const Point& z) {
  if (z.dim() != vc.dim())
    raise(Errc::dimension_mismatch, "point has " + std::to_string(z.dim()) +
                                        " coordinates, vector set expects " +
                                        std::to_string(vc.dim()));
  return dot(vc.direction, z);
}

const char* pair_verdict_name(PairVerdict verdict) noexcept {
  switch (verdict) {
    case PairVerdict::separable: return "separable";
    case PairVerdict::inseparable: return "inseparable";
    case PairVerdict::iteration_cap_exceeded: return "iteration-cap-exceeded";
  }
  return "unknown";
}

namespace {

// Scale so max |coefficient| = 1 and the leading nonzero coefficient is
// positive; report conventions stay stable across solver paths.
void canonicalize(std::vector<Rational>& w, Rational& c) {
  Rational scale = 0;
  for (const Rational& wj : w) {
    Rational a = wj < 0 ? Rational(-wj) : wj;
    if (a > scale) scale = a;
  }
  if (scale == 0) throw std::logic_error("separating hyperplane has a zero normal");
  for (Rational& wj : w) wj /= scale;
  c /= scale;
  for (const Rational& wj : w) {
    if (wj != 0) {
      if (wj < 0) {
        for (Rational& x : w) x = -x;
        c = -c;
      }
      break;
    }
  }
}

// Exact strict check; fills margin and side when separation holds.
bool verify_strict(const std::vector<Rational>& w, const Rational& c, const ConceptSet& a,
                   const ConceptSet& b, Rational& margin, GroupSide& side_a) {
  bool first = true;
  bool a_above = false;
  Rational best = 0;
  bool have_best = false;
  auto visit = [&](const Point& p, bool in_a) -> bool {
    Rational v = dot(w, p) - c;
    if (v == 0) return false;
    bool above = v > 0;
    if (first) {
      first = false;
      a_above = in_a ? above : !above;
    }
    if ((in_a && above != a_above) || (!in_a && above == a_above)) return false;
    Rational d = above ? v : Rational(-v);
    if (!have_best || d < best) {
      best = d;
      have_best = true;
    }
    return true;
  };
  for (const Point& p : a.members)
    if (!visit(p, true)) return false;
  for (const Point& p : b.members)
    if (!visit(p, false)) return false;
  margin = best;
  side_a = a_above ? GroupSide::above : GroupSide::below;
  return true;
}

struct ExactDecision {
  bool separable = false;
  std::vector<Rational> w;
  Rational c;
  std::optional<Point> witness;
};

// Maximize the L-infinity-bounded margin t subject to
//   w.a - c >= t for a in A,   c - w.b >= t for b in B,   |w_j| <= 1.
// t* > 0 exactly when the groups are strictly separable.
ExactDecision decide_exact(const ConceptSet& a, const ConceptSet& b) {
  const std::size_t k = a.dim();
  const std::size_t na = a.members.size();
  const std::size_t nb = b.members.size();
  const std::size_t wp = 0, wn = k, cp = 2 * k, cn = 2 * k + 1, tv = 2 * k + 2;
  const std::size_t sa = 2 * k + 3, sb = sa + na, up = sb + nb, vn = up + k;
  const std::size_t nvars = vn + k;

  lp::Problem prob;
  prob.objective.assign(nvars, Rational(0));
  prob.objective[tv] = 1;
  auto add_row = [&](std::vector<Rational> row, Rational rhs) {
    prob.constraints.push_back(std::move(row));
    prob.rhs.push_back(std::move(rhs));
  };
  for (std::size_t i = 0; i < na; ++i) {
    std::vector<Rational> row(nvars, Rational(0));
    const auto& coords = a.members[i].coords();
    for (std::size_t j = 0; j < k; ++j) {
      row[wp + j] = coords[j];
      row[wn + j] = -coords[j];
    }
    row[cp] = -1;
    row[cn] = 1;
    row[tv] = -1;
    row[sa + i] = -1;
    add_row(std::move(row), Rational(0));
  }
  for (std::size_t l = 0; l < nb; ++l) {
    std::vector<Rational> row(nvars, Rational(0));
    const auto& coords = b.members[l].coords();
    for (std::size_t j = 0; j < k; ++j) {
      row[wp + j] = -coords[j];
      row[wn + j] = coords[j];
    }
    row[cp] = 1;
    row[cn] = -1;
    row[tv] = -1;
    row[sb + l] = -1;
    add_row(std::move(row), Rational(0));
  }
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<Rational> row(nvars, Rational(0));
    row[wp + j] = 1;
    row[up + j] = 1;
    add_row(std::move(row), Rational(1));
  }
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<Rational> row(nvars, Rational(0));
    row[wn + j] = 1;
    row[vn + j] = 1;
    add_row(std::move(row), Rational(1));
  }

  lp::Solution sol = lp::solve(prob);
  if (sol.status != lp::Status::optimal)
    throw std::logic_error("margin program must be feasible and bounded");

  ExactDecision out;
  if (sol.objective_value > 0) {
    out.separable = true;
    out.w.reserve(k);
    for (std::size_t j = 0; j < k; ++j) out.w.push_back(sol.x[wp + j] - sol.x[wn + j]);
    out.c = sol.x[cp] - sol.x[cn];
    return out;
  }

  // No strict separation: the convex hulls intersect. Recover a common
  // point as an explicit certificate.
  lp::Problem hull;
  const std::size_t hvars = na + nb;
  hull.objective.assign(hvars, Rational(0));
  {
    std::vector<Rational> row(hvars, Rational(0));
    for (std::size_t i = 0; i < na; ++i) row[i] = 1;
    hull.constraints.push_back(std::move(row));
    hull.rhs.push_back(Rational(1));
  }
  {
    std::vector<Rational> row(hvars, Rational(0));
    for (std::size_t l = 0; l < nb; ++l) row[na + l] = 1;
    hull.constraints.push_back(std::move(row));
    hull.rhs.push_back(Rational(1));
  }
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<Rational> row(hvars, Rational(0));
    for (std::size_t i = 0; i < na; ++i) row[i] = a.members[i].coords()[j];
    for (std::size_t l = 0; l < nb; ++l) row[na + l] = -b.members[l].coords()[j];
    hull.constraints.push_back(std::move(row));
    hull.rhs.push_back(Rational(0));
  }
  lp::Solution hull_sol = lp::solve(hull);
  if (hull_sol.status != lp::Status::optimal)
    throw std::logic_error("zero-margin groups must have intersecting hulls");
  std::vector<Rational> coords(k, Rational(0));
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < na; ++i)
      coords[j] += hull_sol.x[i] * a.members[i].coords()[j];
  out.witness = Point(std::move(coords));
  return out;
}

struct PerceptronResult {
  bool converged = false;
  std::vector<Rational> w;
  Rational c;
};

// Margin perceptron on data normalized per-dimension to [-1, 1]. The
// learned weights are mapped back to exact rationals and are only ever
// trusted after strict re-verification on the original points.
PerceptronResult run_perceptron(const ConceptSet& a, const ConceptSet& b, std::size_t cap) {
  const std::size_t k = a.dim();
  std::vector<Rational> lo(k), hi(k);
  bool first = true;
  auto widen = [&](const Point& p) {
    for (std::size_t j = 0; j < k; ++j) {
      const Rational& v = p.coords()[j];
      if (first) continue;
      if (v < lo[j]) lo[j] = v;
      if (v > hi[j]) hi[j] = v;
    }
    if (first) {
      lo = p.coords();
      hi = p.coords();
      first = false;
    }
  };
  for (const Point& p : a.members) widen(p);
  for (const Point& p : b.members) widen(p);

  std::vector<Rational> center(k), half(k);
  std::vector<std::size_t> active;
  for (std::size_t j = 0; j < k; ++j) {
    center[j] = (lo[j] + hi[j]) / 2;
    half[j] = (hi[j] - lo[j]) / 2;
    if (half[j] != 0) active.push_back(j);
  }

  auto features = [&](const Point& p) {
    std::vector<double> f;
    f.reserve(active.size());
    for (std::size_t j : active) f.push_back(to_double((p.coords()[j] - center[j]) / half[j]));
    return f;
  };
  std::vector<std::pair<std::vector<double>, int>> samples;
  samples.reserve(a.members.size() + b.members.size());
  for (const Point& p : a.members) samples.emplace_back(features(p), 1);
  for (const Point& p : b.members) samples.emplace_back(features(p), -1);

  std::vector<double> wt(active.size(), 0.0);
  double bias = 0.0;
  std::size_t updates = 0;
  bool converged = false;
  while (!converged) {
    bool clean = true;
    for (const auto& [f, label] : samples) {
      double s = bias;
      for (std::size_t j = 0; j < f.size(); ++j) s += wt[j] * f[j];
      if (s * label <= 0.0) {
        for (std::size_t j = 0; j < f.size(); ++j) wt[j] += label * f[j];
        bias += label;
        clean = false;
        if (++updates >= cap) return {};
      }
    }
    converged = clean;
  }

  PerceptronResult out;
  out.converged = true;
  out.w.assign(k, Rational(0));
  Rational offset = Rational(bias);
  for (std::size_t idx = 0; idx < active.size(); ++idx) {
    std::size_t j = active[idx];
    Rational wj = Rational(wt[idx]) / half[j];
    out.w[j] = wj;
    offset -= Rational(wt[idx]) * center[j] / half[j];
  }
  // Decision value was w.x + offset > 0 for group a; as a hyperplane
  // {z : w.z = c} that is c = -offset.
  out.c = -offset;
  return out;
}

PairResult decide_pair(std::size_t ia, std::size_t ib, const ConceptSet& a, const ConceptSet& b,
                       const SeparabilityOptions& options) {
  PairResult result;
  result.group_a = ia;
  result.group_b = ib;

  // A shared point sits in both hulls, so no hyperplane can work.
  {
    std::vector<Point> shared;
    std::set_intersection(a.members.begin(), a.members.end(), b.members.begin(),
                          b.members.end(), std::back_inserter(shared));
    if (!shared.empty()) {
      result.verdict = PairVerdict::inseparable;
      result.hull_witness = shared.front();
      result.certificate = "shared-point";
      return result;
    }
  }

  PerceptronResult fast = run_perceptron(a, b, options.perceptron_cap);
  if (fast.converged) {
    Rational margin;
    GroupSide side = GroupSide::above;
    std::vector<Rational> w = fast.w;
    Rational c = fast.c;
    canonicalize(w, c);
    if (verify_strict(w, c, a, b, margin, side)) {
      result.verdict = PairVerdict::separable;
      result.hyperplane = SeparatingHyperplane{std::move(w), std::move(c), std::move(margin), side};
      result.certificate = "perceptron-verified";
      return result;
    }
  }

  if (a.members.size() + b.members.size() <= options.exact_limit) {
    ExactDecision exact = decide_exact(a, b);
    if (exact.separable) {
      Rational margin;
      GroupSide side = GroupSide::above;
      canonicalize(exact.w, exact.c);
      if (!verify_strict(exact.w, exact.c, a, b, margin, side))
        throw std::logic_error("exact margin hyperplane failed strict verification");
      result.verdict = PairVerdict::separable;
      result.hyperplane = SeparatingHyperplane{std::move(exact.w), std::move(exact.c),
                                               std::move(margin), side};
      result.certificate = "exact-lp";
    } else {
      result.verdict = PairVerdict::inseparable;
      result.hull_witness = std::move(exact.witness);
      result.certificate = "exact-lp";
    }
    return result;
  }

  result.verdict = PairVerdict::iteration_cap_exceeded;
  result.certificate = "perceptron-cap";
  return result;
}

}  // namespace

SeparabilityReport check_linear_separability(const std::vector<ConceptSet>& groups,
                                             const SeparabilityOptions& options) {
  if (groups.size() < 2)
    raise(Errc::invalid_argument, "separability needs at least two groups");
  for (std::size_t i = 1; i < groups.size(); ++i) {
    if (groups[i].dim() != groups[0].dim())
      raise(Errc::dimension_mismatch,
            "group " + std::to_string(i) + " has dimension " + std::to_string(groups[i].dim()) +
                ", expected " + std::to_string(groups[0].dim()));
  }
  SeparabilityReport report;
  for (std::size_t i = 0; i < groups.size(); ++i)
    for (std::size_t j = i + 1; j < groups.size(); ++j)
      report.pairs.push_back(decide_pair(i, j, groups[i], groups[j], options));
  return report;
}

}  // namespace maplaw
