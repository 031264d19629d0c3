#include <gtest/gtest.h>

#include <random>

#include "fibered_floer/errors.hpp"
#include "fibered_floer/word_syntax.hpp"
#include "test_support.hpp"

namespace fibered_floer {
namespace {

using testing::td;
using testing::tg;
using testing::ts;

TEST(ParseTwists, Examples) {
  EXPECT_EQ(parse_twists("g d^-2"), (std::vector<DehnTwist>{tg(1), td(-2)}));
  EXPECT_EQ(parse_twists("g^2*d^2"), (std::vector<DehnTwist>{tg(2), td(2)}));
  EXPECT_EQ(parse_twists("  g3^+4\td  "), (std::vector<DehnTwist>{ts(3, 4), td(1)}));
  EXPECT_TRUE(parse_twists("").empty());
  EXPECT_TRUE(parse_twists(" * ").empty());
}

std::size_t offset_of(std::string_view src) {
  try {
    parse_twists(src);
  } catch (const ParseError& e) {
    return e.offset();
  }
  ADD_FAILURE() << "no ParseError for '" << src << "'";
  return 0;
}

TEST(ParseTwists, ErrorOffsets) {
  EXPECT_EQ(offset_of("x"), 0u);
  EXPECT_EQ(offset_of("g dx"), 3u);
  EXPECT_EQ(offset_of("g^"), 2u);
  EXPECT_EQ(offset_of("g^-"), 3u);
  EXPECT_EQ(offset_of("g0"), 1u);
  EXPECT_EQ(offset_of("gd"), 1u);
  EXPECT_EQ(offset_of("g^99999999999999999999"), 2u);
}

TEST(ParseTwists, ZeroExponent) {
  try {
    parse_twists("g d^0");
    FAIL();
  } catch (const ParseError&) {
    FAIL() << "zero exponent is not a syntax error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroExponent);
  }
}

TEST(ParseWord, Normalizes) {
  EXPECT_EQ(parse_word("g g d", 3), TwistWord::make(3, {tg(2), td(1)}));
  EXPECT_EQ(render_word(parse_word("g^2 g^-1 d*d", 4)), "g d^2");
  try {
    parse_word("g4", 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidCurve);
  }
  try {
    parse_word("g g^-1", 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroExponent);
  }
}

TEST(WordSyntaxProperties, RenderParseRoundTrip) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const int g = 3 + trial % 4;
    const TwistWord w = testing::random_pair_word(rng, g, 8, 50);
    EXPECT_EQ(parse_word(render_word(w), g), w);
  }
  const TwistWord disjoint = TwistWord::make(6, {ts(1, -3), ts(6, 1)});
  EXPECT_EQ(render_word(disjoint), "g1^-3 g6");
  EXPECT_EQ(parse_word(render_word(disjoint), 6), disjoint);
}

}  // namespace
}  // namespace fibered_floer
