#pragma once

// Text form of twist words.
//
//   word   := sep* (token (sep+ token)*)? sep*
//   sep    := whitespace | '*'
//   token  := ('g' | 'd' | 'g' index) ('^' int)?
//
// "g" twists along gamma, "d" along delta, "g<i>" along the standard curve
// in handle i. A missing exponent means 1. Twists compose left-to-right.

#include <string>
#include <string_view>
#include <vector>

#include "fibered_floer/mapping_class.hpp"

namespace fibered_floer {

// Syntax only; throws ParseError (with byte offset) or ZeroExponent.
std::vector<DehnTwist> parse_twists(std::string_view src);

// Parses and normalizes against the genus. Also throws GenusTooSmall and
// InvalidCurve through TwistWord::make.
TwistWord parse_word(std::string_view src, int genus);

// Space-separated, "^1" omitted. parse_word(render_word(w), g) == w.
std::string render_word(const TwistWord& word);

}  // namespace fibered_floer
