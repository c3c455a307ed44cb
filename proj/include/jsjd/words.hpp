#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace jsjd {

/// A signed generator index: +i is the i-th generator, -i its inverse.
using Letter = std::int8_t;

class MalformedInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class AlphabetMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Generators are printed as a, b, c, ... and their inverses as A, B, C, ...
/// so the rank is capped at 26.
struct Alphabet {
  static constexpr int kMaxRank = 26;

  explicit Alphabet(int r = 2);

  bool contains(int letter) const {
    return letter != 0 && letter >= -rank && letter <= rank;
  }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

  int rank;
};

/// Position of a letter in the order a < A < b < B < ...
inline int letter_order(Letter l) {
  return l > 0 ? 2 * (l - 1) : 2 * (-l - 1) + 1;
}

char letter_char(Letter l);

/// A freely reduced word. Every constructor path goes through reduction, so
/// the letters never contain an adjacent pair g g^-1.
class FreeWord {
 public:
  FreeWord() = default;
  explicit FreeWord(Alphabet alphabet) : alphabet_(alphabet) {}

  static FreeWord generator(int index, Alphabet alphabet);

  Alphabet alphabet() const { return alphabet_; }
  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }

  /// Letters as raw bytes; used as a hash key.
  std::string key() const { return {letters_.begin(), letters_.end()}; }

  friend bool operator==(const FreeWord&, const FreeWord&) = default;

  /// Shortlex order with a < A < b < B < ...
  friend bool operator<(const FreeWord& u, const FreeWord& v);

 private:
  friend class WordBuilder;

  Alphabet alphabet_;
  std::vector<Letter> letters_;
};

/// Accumulates letters on a stack, cancelling each incoming letter against
/// the top. Used by every operation that produces a word.
class WordBuilder {
 public:
  explicit WordBuilder(Alphabet alphabet) : word_(alphabet) {}

  void reserve(std::size_t n) { word_.letters_.reserve(n); }
  void push(Letter l) {
    auto& s = word_.letters_;
    if (!s.empty() && s.back() == -l) {
      s.pop_back();
    } else {
      s.push_back(l);
    }
  }
  void append(const FreeWord& w);
  void append_inverse(const FreeWord& w);
  std::size_t size() const { return word_.letters_.size(); }

  FreeWord finish() && { return std::move(word_); }

 private:
  FreeWord word_;
};

/// A cyclically reduced word considered up to rotation.
class CyclicWord {
 public:
  CyclicWord() = default;
  /// Throws MalformedInput unless `w` is cyclically reduced.
  explicit CyclicWord(FreeWord w);

  const FreeWord& word() const { return word_; }
  std::size_t size() const { return word_.size(); }
  bool empty() const { return word_.empty(); }

  /// Lexicographically least rotation.
  CyclicWord least_rotation() const;
  /// Least rotation of the word or of its inverse, encoded with letter_order.
  std::string normal_key() const;
  /// Least rotation of the word only (orientation kept).
  std::string directed_key() const;

  friend bool operator==(const CyclicWord& u, const CyclicWord& v);

 private:
  FreeWord word_;
};

struct CyclicReduction {
  CyclicWord core;
  FreeWord conjugator;  // input == conjugator * core * conjugator^-1
};

struct Root {
  FreeWord root;
  long long exponent;
};

FreeWord reduce(std::span<const int> raw, Alphabet alphabet);

FreeWord multiply(const FreeWord& u, const FreeWord& v);
FreeWord inverse(const FreeWord& u);
/// g u g^-1
FreeWord conjugate(const FreeWord& u, const FreeWord& g);
FreeWord power(const FreeWord& u, long long k);
/// g^-1 u g, i.e. the conjugation used when reading relative to a new basepoint.
FreeWord conjugate_inverse(const FreeWord& u, const FreeWord& g);
FreeWord commutator(const FreeWord& u, const FreeWord& v);
bool commute(const FreeWord& u, const FreeWord& v);

bool is_cyclically_reduced(const FreeWord& w);
CyclicReduction cyclic_reduce(const FreeWord& w);

/// Maximal root u with w = u^k, k >= 2; empty when w is not a proper power.
/// Throws MalformedInput for the identity.
std::optional<Root> is_proper_power(const FreeWord& w);

/// Returns k with u == base^k when such k exists. base must be nontrivial.
std::optional<long long> exponent_in(const FreeWord& u, const FreeWord& base);

std::vector<long long> exponent_sums(const FreeWord& w);

/// Image of w under x_i -> images[i]. If every image has the form g X_i g^-1
/// for a common g, the evaluation is done on the X_i and conjugated back.
FreeWord substitute(const FreeWord& w, std::span<const FreeWord> images);

bool conjugacy_equal(const FreeWord& u, const FreeWord& v);

/// Rotation of the letter sequence by `shift` places to the left.
FreeWord rotate(const FreeWord& w, std::size_t shift);

std::string to_string(const FreeWord& w);
inline std::string to_string(const CyclicWord& w) { return to_string(w.word()); }
/// Runs of one letter are written with exponents, e.g. "a^3B^2" for aaaBB.
std::string to_compact_string(const FreeWord& w);

/// Parses a bare letter string such as "abAB" (no grammar sugar).
FreeWord word_from_letters(std::string_view letters, Alphabet alphabet = Alphabet{2});

}  // namespace jsjd
