#include "jsjd/words.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace jsjd {

namespace {

void require_same_alphabet(const FreeWord& u, const FreeWord& v) {
  if (u.alphabet() != v.alphabet()) {
    throw AlphabetMismatch("words over alphabets of rank " + std::to_string(u.alphabet().rank) +
                           " and " + std::to_string(v.alphabet().rank));
  }
}

std::vector<int> prefix_function(std::span<const Letter> s) {
  std::vector<int> pi(s.size(), 0);
  for (std::size_t i = 1; i < s.size(); ++i) {
    int k = pi[i - 1];
    while (k > 0 && s[i] != s[k]) k = pi[k - 1];
    if (s[i] == s[k]) ++k;
    pi[i] = k;
  }
  return pi;
}

// Index of the lexicographically least rotation (two-pointer minimum expression).
std::size_t least_rotation_index(std::span<const Letter> s) {
  const std::size_t n = s.size();
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    const int a = letter_order(s[(i + k) % n]);
    const int b = letter_order(s[(j + k) % n]);
    if (a == b) {
      ++k;
      continue;
    }
    if (a > b) {
      i += k + 1;
    } else {
      j += k + 1;
    }
    if (i == j) ++j;
    k = 0;
  }
  return std::min(i, j);
}

std::string rotation_key(std::span<const Letter> s, std::size_t start) {
  std::string key(s.size(), '\0');
  for (std::size_t t = 0; t < s.size(); ++t) {
    key[t] = static_cast<char>(letter_order(s[(start + t) % s.size()]));
  }
  return key;
}

bool contains_rotation(std::span<const Letter> text, std::span<const Letter> pattern) {
  if (text.size() != pattern.size()) return false;
  if (pattern.empty()) return true;
  const auto pi = prefix_function(pattern);
  const std::size_t n = text.size();
  std::size_t q = 0;
  for (std::size_t i = 0; i + 1 < 2 * n; ++i) {
    const Letter c = text[i % n];
    while (q > 0 && pattern[q] != c) q = pi[q - 1];
    if (pattern[q] == c) ++q;
    if (q == pattern.size()) return true;
  }
  return false;
}

}  // namespace

Alphabet::Alphabet(int r) : rank(r) {
  if (r < 1 || r > kMaxRank) {
    throw MalformedInput("alphabet rank must lie in 1.." + std::to_string(kMaxRank));
  }
}

char letter_char(Letter l) {
  return l > 0 ? static_cast<char>('a' + l - 1) : static_cast<char>('A' - l - 1);
}

FreeWord FreeWord::generator(int index, Alphabet alphabet) {
  if (!alphabet.contains(index)) throw MalformedInput("generator index out of range");
  WordBuilder b(alphabet);
  b.push(static_cast<Letter>(index));
  return std::move(b).finish();
}

bool operator<(const FreeWord& u, const FreeWord& v) {
  if (u.size() != v.size()) return u.size() < v.size();
  return std::lexicographical_compare(
      u.letters_.begin(), u.letters_.end(), v.letters_.begin(), v.letters_.end(),
      [](Letter x, Letter y) { return letter_order(x) < letter_order(y); });
}

void WordBuilder::append(const FreeWord& w) {
  for (Letter l : w.letters()) push(l);
}

void WordBuilder::append_inverse(const FreeWord& w) {
  const auto s = w.letters();
  for (auto it = s.rbegin(); it != s.rend(); ++it) push(static_cast<Letter>(-*it));
}

CyclicWord::CyclicWord(FreeWord w) : word_(std::move(w)) {
  if (!is_cyclically_reduced(word_)) {
    throw MalformedInput("word " + to_string(word_) + " is not cyclically reduced");
  }
}

CyclicWord CyclicWord::least_rotation() const {
  if (word_.empty()) return *this;
  return CyclicWord(rotate(word_, least_rotation_index(word_.letters())));
}

std::string CyclicWord::directed_key() const {
  return rotation_key(word_.letters(), word_.empty() ? 0 : least_rotation_index(word_.letters()));
}

std::string CyclicWord::normal_key() const {
  const FreeWord inv = inverse(word_);
  std::string forward = directed_key();
  std::string backward =
      rotation_key(inv.letters(), inv.empty() ? 0 : least_rotation_index(inv.letters()));
  return std::min(forward, backward);
}

bool operator==(const CyclicWord& u, const CyclicWord& v) {
  return u.word_.alphabet() == v.word_.alphabet() &&
         contains_rotation(u.word_.letters(), v.word_.letters());
}

FreeWord reduce(std::span<const int> raw, Alphabet alphabet) {
  WordBuilder b(alphabet);
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (!alphabet.contains(raw[i])) {
      throw MalformedInput("letter " + std::to_string(raw[i]) + " at position " +
                           std::to_string(i) + " is outside an alphabet of rank " +
                           std::to_string(alphabet.rank));
    }
    b.push(static_cast<Letter>(raw[i]));
  }
  return std::move(b).finish();
}

FreeWord multiply(const FreeWord& u, const FreeWord& v) {
  require_same_alphabet(u, v);
  WordBuilder b(u.alphabet());
  b.reserve(u.size() + v.size());
  b.append(u);
  b.append(v);
  return std::move(b).finish();
}

FreeWord inverse(const FreeWord& u) {
  WordBuilder b(u.alphabet());
  b.reserve(u.size());
  b.append_inverse(u);
  return std::move(b).finish();
}

FreeWord conjugate(const FreeWord& u, const FreeWord& g) {
  require_same_alphabet(u, g);
  WordBuilder b(u.alphabet());
  b.append(g);
  b.append(u);
  b.append_inverse(g);
  return std::move(b).finish();
}

FreeWord conjugate_inverse(const FreeWord& u, const FreeWord& g) {
  require_same_alphabet(u, g);
  WordBuilder b(u.alphabet());
  b.append_inverse(g);
  b.append(u);
  b.append(g);
  return std::move(b).finish();
}

FreeWord power(const FreeWord& u, long long k) {
  if (k == 0 || u.empty()) return FreeWord(u.alphabet());
  if (k < 0) return power(inverse(u), -k);
  const auto [core, g] = cyclic_reduce(u);
  WordBuilder b(u.alphabet());
  b.reserve(2 * g.size() + core.size() * static_cast<std::size_t>(k));
  b.append(g);
  for (long long i = 0; i < k; ++i) b.append(core.word());
  b.append_inverse(g);
  return std::move(b).finish();
}

FreeWord commutator(const FreeWord& u, const FreeWord& v) {
  require_same_alphabet(u, v);
  WordBuilder b(u.alphabet());
  b.append(u);
  b.append(v);
  b.append_inverse(u);
  b.append_inverse(v);
  return std::move(b).finish();
}

bool commute(const FreeWord& u, const FreeWord& v) { return commutator(u, v).empty(); }

bool is_cyclically_reduced(const FreeWord& w) {
  return w.size() < 2 || w.front() != -w.back();
}

CyclicReduction cyclic_reduce(const FreeWord& w) {
  const auto s = w.letters();
  const std::size_t n = s.size();
  std::size_t i = 0;
  while (2 * i + 1 < n && s[i] == -s[n - 1 - i]) ++i;
  WordBuilder conj(w.alphabet());
  for (std::size_t t = 0; t < i; ++t) conj.push(s[t]);
  WordBuilder core(w.alphabet());
  core.reserve(n - 2 * i);
  for (std::size_t t = i; t < n - i; ++t) core.push(s[t]);
  return {CyclicWord(std::move(core).finish()), std::move(conj).finish()};
}

std::optional<Root> is_proper_power(const FreeWord& w) {
  if (w.empty()) throw MalformedInput("the identity has no well-defined root");
  const auto [core, g] = cyclic_reduce(w);
  const auto s = core.word().letters();
  const auto pi = prefix_function(s);
  const std::size_t n = s.size();
  const std::size_t period = n - static_cast<std::size_t>(pi[n - 1]);
  if (period == n || n % period != 0) return std::nullopt;
  WordBuilder b(w.alphabet());
  b.append(g);
  for (std::size_t t = 0; t < period; ++t) b.push(s[t]);
  b.append_inverse(g);
  return Root{std::move(b).finish(), static_cast<long long>(n / period)};
}

std::optional<long long> exponent_in(const FreeWord& u, const FreeWord& base) {
  if (base.empty()) throw MalformedInput("exponent_in needs a nontrivial base");
  require_same_alphabet(u, base);
  if (u.empty()) return 0;
  const auto [core, g] = cyclic_reduce(base);
  const FreeWord shifted = conjugate_inverse(u, g);
  const auto c = core.word().letters();
  const auto s = shifted.letters();
  if (s.empty() || s.size() % c.size() != 0) return std::nullopt;
  const auto k = static_cast<long long>(s.size() / c.size());
  bool forward = true;
  bool backward = true;
  const std::size_t m = c.size();
  for (std::size_t i = 0; i < s.size() && (forward || backward); ++i) {
    forward = forward && s[i] == c[i % m];
    // (c^-1)^k reads c backwards with inverted letters.
    backward = backward && s[i] == -c[m - 1 - (i % m)];
  }
  if (forward) return k;
  if (backward) return -k;
  return std::nullopt;
}

std::vector<long long> exponent_sums(const FreeWord& w) {
  std::vector<long long> sums(static_cast<std::size_t>(w.alphabet().rank), 0);
  for (Letter l : w.letters()) {
    sums[static_cast<std::size_t>(std::abs(l)) - 1] += l > 0 ? 1 : -1;
  }
  return sums;
}

FreeWord substitute(const FreeWord& w, std::span<const FreeWord> images) {
  if (images.size() != static_cast<std::size_t>(w.alphabet().rank)) {
    throw MalformedInput("substitute needs " + std::to_string(w.alphabet().rank) +
                         " images, got " + std::to_string(images.size()));
  }
  const Alphabet target = images.empty() ? w.alphabet() : images.front().alphabet();
  for (const auto& img : images) {
    if (img.alphabet() != target) throw AlphabetMismatch("images over different alphabets");
  }

  // Longest g with every nontrivial image equal to g X g^-1 without cancellation.
  std::size_t common = SIZE_MAX;
  const FreeWord* first = nullptr;
  for (const auto& img : images) {
    if (img.empty()) continue;
    const auto s = img.letters();
    std::size_t t = 0;
    while (2 * t + 1 < s.size() && s[t] == -s[s.size() - 1 - t]) ++t;
    if (first == nullptr) {
      first = &img;
      common = t;
    } else {
      std::size_t p = 0;
      const auto f = first->letters();
      while (p < std::min(common, t) && f[p] == s[p]) ++p;
      common = p;
    }
  }
  if (first == nullptr) return FreeWord(target);

  std::vector<FreeWord> stripped;
  stripped.reserve(images.size());
  for (const auto& img : images) {
    WordBuilder b(target);
    if (!img.empty()) {
      const auto s = img.letters();
      for (std::size_t i = common; i < s.size() - common; ++i) b.push(s[i]);
    }
    stripped.push_back(std::move(b).finish());
  }

  WordBuilder out(target);
  const auto g = first->letters().first(common);
  for (Letter l : g) out.push(l);
  for (Letter l : w.letters()) {
    const FreeWord& img = stripped[static_cast<std::size_t>(std::abs(l)) - 1];
    if (l > 0) {
      out.append(img);
    } else {
      out.append_inverse(img);
    }
  }
  for (auto it = g.rbegin(); it != g.rend(); ++it) out.push(static_cast<Letter>(-*it));
  return std::move(out).finish();
}

bool conjugacy_equal(const FreeWord& u, const FreeWord& v) {
  require_same_alphabet(u, v);
  const auto cu = cyclic_reduce(u).core;
  const auto cv = cyclic_reduce(v).core;
  return cu == cv;
}

FreeWord rotate(const FreeWord& w, std::size_t shift) {
  const auto s = w.letters();
  if (s.empty()) return w;
  shift %= s.size();
  WordBuilder b(w.alphabet());
  b.reserve(s.size());
  for (std::size_t t = 0; t < s.size(); ++t) b.push(s[(shift + t) % s.size()]);
  FreeWord r = std::move(b).finish();
  if (r.size() != s.size()) throw MalformedInput("rotating a word that is not cyclically reduced");
  return r;
}

std::string to_string(const FreeWord& w) {
  std::string out;
  out.reserve(w.size());
  for (Letter l : w.letters()) out.push_back(letter_char(l));
  return out;
}

std::string to_compact_string(const FreeWord& w) {
  std::string out;
  const auto s = w.letters();
  for (std::size_t i = 0; i < s.size();) {
    std::size_t j = i;
    while (j < s.size() && s[j] == s[i]) ++j;
    out.push_back(letter_char(s[i]));
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

FreeWord word_from_letters(std::string_view letters, Alphabet alphabet) {
  std::vector<int> raw;
  raw.reserve(letters.size());
  for (std::size_t i = 0; i < letters.size(); ++i) {
    const char c = letters[i];
    if (c >= 'a' && c <= 'z') {
      raw.push_back(c - 'a' + 1);
    } else if (c >= 'A' && c <= 'Z') {
      raw.push_back(-(c - 'A' + 1));
    } else {
      throw MalformedInput("unexpected character '" + std::string(1, c) + "' at offset " +
                           std::to_string(i));
    }
  }
  return reduce(raw, alphabet);
}

}  // namespace jsjd
