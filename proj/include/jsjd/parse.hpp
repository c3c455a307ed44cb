#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jsjd/words.hpp"

namespace jsjd {

class ParseError : public MalformedInput {
 public:
  ParseError(std::size_t offset, const std::string& what);

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Upper bound on the number of letters any parsed subexpression may reduce to.
inline constexpr std::size_t kMaxParsedLength = 50'000'000;

/// Parses the word grammar
///   word := term+ ; term := atom ('^' int)? ;
///   atom := letter | '(' word ')' | '[' word ',' word ']'
/// and returns the reduced word. Without an explicit alphabet the rank is the
/// largest generator mentioned, but at least 2.
FreeWord parse_word(std::string_view text, std::optional<Alphabet> alphabet = std::nullopt);

/// Splits a comma-separated list of words, ignoring commas nested in brackets.
std::vector<std::string> split_word_list(std::string_view text);

}  // namespace jsjd
