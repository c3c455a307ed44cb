#include "jsjd/random.hpp"

#include <limits>

namespace jsjd {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  if (span == std::numeric_limits<std::uint64_t>::max()) return static_cast<std::int64_t>(engine_());
  const std::uint64_t range = span + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return lo + static_cast<std::int64_t>(x % range);
}

FreeWord random_word(Rng& rng, std::size_t length, Alphabet alphabet) {
  WordBuilder b(alphabet);
  b.reserve(length);
  const int choices = 2 * alphabet.rank;
  Letter previous = 0;
  for (std::size_t i = 0; i < length; ++i) {
    Letter l;
    do {
      const auto r = static_cast<int>(rng.uniform(0, choices - 1));
      l = static_cast<Letter>(r % 2 == 0 ? r / 2 + 1 : -(r / 2 + 1));
    } while (l == -previous);
    b.push(l);
    previous = l;
  }
  return std::move(b).finish();
}

FreeWord random_word(Rng& rng, std::size_t min_length, std::size_t max_length,
                     Alphabet alphabet) {
  const auto length = static_cast<std::size_t>(
      rng.uniform(static_cast<std::int64_t>(min_length), static_cast<std::int64_t>(max_length)));
  return random_word(rng, length, alphabet);
}

}  // namespace jsjd
