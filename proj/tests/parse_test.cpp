#include <gtest/gtest.h>

#include "jsjd/parse.hpp"
#include "support.hpp"

namespace jsjd {
namespace {

using testing::S;

TEST(ParseWord, Sugar) {
  EXPECT_EQ(S(parse_word("[a,b]")), "abAB");
  EXPECT_EQ(S(parse_word("a^3 b^-2")), "aaaBB");
  EXPECT_EQ(S(parse_word("(ab)^2")), "abab");
  EXPECT_EQ(S(parse_word("[a^8,b^8]")),
            "aaaaaaaabbbbbbbbAAAAAAAABBBBBBBB");
  EXPECT_EQ(S(parse_word("(aB)^-1")), "bA");
  EXPECT_EQ(S(parse_word(" a b\tA ")), "abA");
  EXPECT_EQ(S(parse_word("a^+2")), "aa");
  EXPECT_TRUE(parse_word("aA").empty());
}

TEST(ParseWord, RankFollowsLetters) {
  EXPECT_EQ(parse_word("a").alphabet().rank, 2);
  EXPECT_EQ(parse_word("ac").alphabet().rank, 3);
  EXPECT_THROW(parse_word("ac", Alphabet{2}), MalformedInput);
}

TEST(ParseWord, ErrorsCarryOffsets) {
  auto offset_of = [](const std::string& text) -> std::size_t {
    try {
      parse_word(text);
    } catch (const ParseError& e) {
      return e.offset();
    }
    return std::string::npos;
  };
  EXPECT_EQ(offset_of(""), 0u);
  EXPECT_EQ(offset_of("a^0"), 2u);
  EXPECT_EQ(offset_of("ab)"), 2u);
  EXPECT_EQ(offset_of("(ab"), 3u);
  EXPECT_EQ(offset_of("[a b]"), 4u);
  EXPECT_EQ(offset_of("a^"), 2u);
  EXPECT_EQ(offset_of("a1"), 1u);
  EXPECT_EQ(offset_of("a^99999999999999999999"), 2u);
  EXPECT_THROW(parse_word("a^100000000"), ParseError);
}

TEST(ParseWord, CanonicalPrintRoundTrips) {
  Rng rng(21);
  for (int i = 0; i < 2000; ++i) {
    const FreeWord w = random_word(rng, 1, 20);
    EXPECT_EQ(parse_word(to_string(w)), w);
    EXPECT_EQ(parse_word(to_compact_string(w)), w);
  }
}

TEST(SplitWordList, RespectsBrackets) {
  EXPECT_EQ(split_word_list("aa,b"), (std::vector<std::string>{"aa", "b"}));
  EXPECT_EQ(split_word_list("[a,b],a^2"), (std::vector<std::string>{"[a,b]", "a^2"}));
  EXPECT_EQ(split_word_list("a"), (std::vector<std::string>{"a"}));
}

}  // namespace
}  // namespace jsjd
