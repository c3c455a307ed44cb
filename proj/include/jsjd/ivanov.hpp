#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jsjd/words.hpp"

namespace jsjd {

/// C^e1 l1 C^e2 l2 ... C^e8 l8 with C = [a^base, b^base].
struct IvanovSpec {
  int base = 8;
  std::array<int, 8> blocks{100, 200, 300, 400, 500, 600, 700, 800};
  std::array<Letter, 8> letters{1, 1, -1, -1, 2, 2, -2, -2};
};

/// Expanded by streaming the blocks through a WordBuilder.
FreeWord ivanov_word(const IvanovSpec& spec = {});

using WordPair = std::array<FreeWord, 2>;

/// w(A) for a pair of images.
FreeWord evaluate(const FreeWord& w, const WordPair& images);

/// Some S with S a_i S^-1 = b_i for both i, if one exists. Both pairs must
/// generate non-cyclic subgroups.
std::optional<FreeWord> simultaneous_conjugator(const WordPair& a, const WordPair& b);

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  /// Descriptions of the first few failures.
  std::vector<std::string> failures;
};

/// Pairs (c^p, c^q) with both images of length at most max_len must give
/// the empty word.
SuiteReport ctest_cyclic_null(std::size_t samples, std::uint64_t seed, std::size_t max_len = 10);

/// Non-commuting pairs of length at most max_len must give a nonempty word.
SuiteReport ctest_noncyclic_nonnull(std::size_t samples, std::uint64_t seed,
                                    std::size_t max_len = 12);

/// Constructed pairs B = W^k A W^-k with W = w(A): w(B) = w(A) and the
/// recovered conjugator is a power of W.
SuiteReport ctest_conjugacy_constructed(std::size_t samples, std::uint64_t seed,
                                        std::size_t max_len = 6);

/// Independent non-commuting pairs: any equality w(A) = w(B) must come with
/// a conjugator that is a power of w(A). Failures count spurious equalities.
SuiteReport ctest_conjugacy_independent(std::size_t samples, std::uint64_t seed,
                                        std::size_t max_len = 12);

/// Every Whitehead move moves w, and conjugation by w fixes it.
SuiteReport stabilizer_probe();

}  // namespace jsjd
