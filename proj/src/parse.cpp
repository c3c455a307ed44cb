#include "jsjd/parse.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>

namespace jsjd {

ParseError::ParseError(std::size_t offset, const std::string& what)
    : MalformedInput("syntax error at byte " + std::to_string(offset) + ": " + what),
      offset_(offset) {}

namespace {

struct Token {
  char c;
  std::size_t offset;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : end_offset_(text.size()) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (!std::isspace(static_cast<unsigned char>(text[i]))) tokens_.push_back({text[i], i});
    }
  }

  FreeWord parse() {
    if (tokens_.empty()) throw ParseError(end_offset_, "empty word");
    FreeWord w = word();
    if (pos_ != tokens_.size()) fail("unexpected '" + std::string(1, peek()) + "'");
    return w;
  }

  int max_generator() const { return max_generator_; }

 private:
  static inline const Alphabet kWide{Alphabet::kMaxRank};

  bool done() const { return pos_ >= tokens_.size(); }
  char peek() const { return done() ? '\0' : tokens_[pos_].c; }
  std::size_t offset() const { return done() ? end_offset_ : tokens_[pos_].offset; }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(offset(), what); }

  void expect(char c) {
    if (peek() != c) {
      fail(done() ? std::string("expected '") + c + "' before end of input"
                  : std::string("expected '") + c + "', found '" + peek() + "'");
    }
    ++pos_;
  }

  static bool starts_atom(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '(' || c == '[';
  }

  FreeWord word() {
    if (!starts_atom(peek())) {
      fail(done() ? "expected a word before end of input"
                  : "expected a letter, '(' or '[', found '" + std::string(1, peek()) + "'");
    }
    WordBuilder b(kWide);
    while (starts_atom(peek())) {
      b.append(term());
      check_size(b.size());
    }
    return std::move(b).finish();
  }

  FreeWord term() {
    FreeWord base = atom();
    if (peek() != '^') return base;
    ++pos_;
    const std::size_t at = offset();
    const long long k = integer();
    if (k == 0) throw ParseError(at, "exponent 0 is not allowed");
    const auto core = cyclic_reduce(base);
    const auto magnitude = static_cast<unsigned long long>(std::llabs(k));
    if (!core.core.empty() &&
        magnitude > (kMaxParsedLength - 2 * core.conjugator.size()) / core.core.size()) {
      throw ParseError(at, "expansion exceeds " + std::to_string(kMaxParsedLength) + " letters");
    }
    return power(base, k);
  }

  FreeWord atom() {
    const char c = peek();
    if (std::isalpha(static_cast<unsigned char>(c))) {
      ++pos_;
      const int index = std::islower(static_cast<unsigned char>(c)) ? c - 'a' + 1 : c - 'A' + 1;
      max_generator_ = std::max(max_generator_, index);
      WordBuilder b(kWide);
      b.push(static_cast<Letter>(std::islower(static_cast<unsigned char>(c)) ? index : -index));
      return std::move(b).finish();
    }
    if (c == '(') {
      ++pos_;
      FreeWord inner = word();
      expect(')');
      return inner;
    }
    ++pos_;  // '['
    FreeWord u = word();
    expect(',');
    FreeWord v = word();
    expect(']');
    return commutator(u, v);
  }

  long long integer() {
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    std::string digits;
    const std::size_t at = offset();
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      digits.push_back(peek());
      ++pos_;
    }
    if (digits.empty()) fail("expected an integer exponent");
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) {
      throw ParseError(at, "exponent out of range");
    }
    return negative ? -value : value;
  }

  void check_size(std::size_t n) const {
    if (n > kMaxParsedLength) {
      fail("expansion exceeds " + std::to_string(kMaxParsedLength) + " letters");
    }
  }

  std::vector<Token> tokens_;
  std::size_t end_offset_;
  std::size_t pos_ = 0;
  int max_generator_ = 0;
};

}  // namespace

FreeWord parse_word(std::string_view text, std::optional<Alphabet> alphabet) {
  Parser parser(text);
  const FreeWord wide = parser.parse();
  const Alphabet target = alphabet.value_or(Alphabet{std::max(2, parser.max_generator())});
  if (parser.max_generator() > target.rank) {
    throw MalformedInput("word mentions generator " +
                         std::string(1, static_cast<char>('a' + parser.max_generator() - 1)) +
                         " outside an alphabet of rank " + std::to_string(target.rank));
  }
  WordBuilder b(target);
  b.reserve(wide.size());
  for (Letter l : wide.letters()) b.push(l);
  return std::move(b).finish();
}

std::vector<std::string> split_word_list(std::string_view text) {
  std::vector<std::string> parts;
  std::string current;
  int depth = 0;
  for (char c : text) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  parts.push_back(current);
  return parts;
}

}  // namespace jsjd
