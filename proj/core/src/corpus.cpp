#include "maplaw/corpus.hpp"

#include "maplaw/errors.hpp"

#include <set>
#include <string>
#include <utility>

namespace maplaw {

std::uint64_t Rng::next_u64() {
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) raise(Errc::invalid_argument, "bound must be positive");
  std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % bound;
  std::uint64_t draw;
  do {
    draw = next_u64();
  } while (draw >= limit);
  return draw % bound;
}

std::int64_t Rng::int_in(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) raise(Errc::invalid_argument, "empty integer interval");
  std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + below(span));
}

Rational random_rational(Rng& rng, std::int64_t max_abs_num, std::int64_t max_den) {
  if (max_abs_num < 0 || max_den < 1)
    raise(Errc::invalid_argument, "rational bounds must allow at least one value");
  long long num = rng.int_in(-max_abs_num, max_abs_num);
  long long den = rng.int_in(1, max_den);
  return Rational(num) / den;
}

namespace {

std::vector<Rational> distinct_scalars(Rng& rng, std::size_t size, std::int64_t magnitude) {
  if (magnitude < 0) raise(Errc::invalid_argument, "magnitude must be nonnegative");
  std::uint64_t available = 2 * static_cast<std::uint64_t>(magnitude) + 1;
  if (available < size)
    raise(Errc::invalid_argument,
          "cannot draw " + std::to_string(size) + " distinct integers from [-" +
              std::to_string(magnitude) + ", " + std::to_string(magnitude) + "]");
  std::set<std::int64_t> seen;
  std::vector<Rational> out;
  while (out.size() < size) {
    std::int64_t v = rng.int_in(-magnitude, magnitude);
    if (seen.insert(v).second) out.emplace_back(v);
  }
  return out;
}

}  // namespace

FiniteMapping random_mapping(Rng& rng, std::size_t size, std::int64_t magnitude) {
  std::vector<Rational> xs = distinct_scalars(rng, size, magnitude);
  std::vector<std::pair<Rational, Rational>> pairs;
  pairs.reserve(size);
  for (const Rational& x : xs) pairs.emplace_back(x, Rational(rng.int_in(-magnitude, magnitude)));
  return mapping_from_scalars(pairs, "random");
}

FiniteMapping random_injective_mapping(Rng& rng, std::size_t size, std::int64_t magnitude) {
  std::vector<Rational> xs = distinct_scalars(rng, size, magnitude);
  std::vector<Rational> ys = distinct_scalars(rng, size, magnitude);
  std::vector<std::pair<Rational, Rational>> pairs;
  pairs.reserve(size);
  for (std::size_t i = 0; i < size; ++i) pairs.emplace_back(xs[i], ys[i]);
  return mapping_from_scalars(pairs, "random-injective");
}

std::vector<FiniteMapping> generate_corpus(const CorpusSpec& spec) {
  Rng rng(spec.seed);
  std::vector<FiniteMapping> out;
  out.reserve(spec.count);
  for (std::size_t i = 0; i < spec.count; ++i) {
    FiniteMapping m = spec.injective ? random_injective_mapping(rng, spec.size, spec.magnitude)
                                     : random_mapping(rng, spec.size, spec.magnitude);
    std::vector<std::pair<Point, Point>> pairs(m.table().begin(), m.table().end());
    out.push_back(FiniteMapping::build(
        std::move(pairs), "seed=" + std::to_string(spec.seed) + ";index=" + std::to_string(i)));
  }
  return out;
}

}  // namespace maplaw
