#pragma once

#include "maplaw/relation.hpp"

#include <cstdint>
#include <vector>

namespace maplaw {

// splitmix64. Chosen over <random> engines because its output is pinned
// by the reference algorithm, so corpora are byte-identical across
// platforms and standard-library versions for a fixed seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();
  // Uniform in [0, bound), bound > 0; rejection sampling, no modulo bias.
  std::uint64_t below(std::uint64_t bound);
  // Uniform in [lo, hi], inclusive.
  std::int64_t int_in(std::int64_t lo, std::int64_t hi);

 private:
  std::uint64_t state_;
};

// Numerator in [-max_abs_num, max_abs_num], denominator in [1, max_den];
// the result is reduced, so bounds describe the draw, not the output.
Rational random_rational(Rng& rng, std::int64_t max_abs_num, std::int64_t max_den);

// size distinct integer domain points in [-magnitude, magnitude]; images
// drawn independently (collisions allowed and likely).
FiniteMapping random_mapping(Rng& rng, std::size_t size, std::int64_t magnitude);
// As above but images are also pairwise distinct.
FiniteMapping random_injective_mapping(Rng& rng, std::size_t size, std::int64_t magnitude);

struct CorpusSpec {
  std::uint64_t seed = 1;
  std::size_t count = 10;
  std::size_t size = 8;
  std::int64_t magnitude = 50;
  bool injective = false;
};

// count mappings drawn from one generator stream; reproducible
// byte-for-byte for a fixed spec.
std::vector<FiniteMapping> generate_corpus(const CorpusSpec& spec);

}  // namespace maplaw
