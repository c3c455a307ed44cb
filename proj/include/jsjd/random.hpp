#pragma once

#include <cstdint>
#include <random>

#include "jsjd/words.hpp"

namespace jsjd {

/// mt19937_64 with a portable bounded draw, so seeded runs give the same
/// words on every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool coin() { return (engine_() >> 63) != 0; }
  std::uint64_t next() { return engine_(); }

  /// Independent stream derived from this one, for per-sample work.
  Rng split() { return Rng(engine_()); }

 private:
  std::mt19937_64 engine_;
};

/// Uniformly random reduced word of exactly `length` letters.
FreeWord random_word(Rng& rng, std::size_t length, Alphabet alphabet = Alphabet{2});
/// Random reduced word whose length is uniform in [min_length, max_length].
FreeWord random_word(Rng& rng, std::size_t min_length, std::size_t max_length,
                     Alphabet alphabet = Alphabet{2});

}  // namespace jsjd
