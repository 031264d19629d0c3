#include "fibered_floer/word_syntax.hpp"

#include <cctype>
#include <charconv>
#include <limits>

#include "fibered_floer/errors.hpp"

namespace fibered_floer {

namespace {

bool is_separator(char c) { return c == '*' || std::isspace(static_cast<unsigned char>(c)); }

bool is_digit(char c) { return c >= '0' && c <= '9'; }

class Scanner {
 public:
  explicit Scanner(std::string_view src) : src_(src) {}

  bool done() const { return pos_ >= src_.size(); }
  std::size_t pos() const { return pos_; }
  char peek() const { return done() ? '\0' : src_[pos_]; }

  void skip_separators() {
    while (!done() && is_separator(src_[pos_])) ++pos_;
  }

  DehnTwist token() {
    const std::size_t start = pos_;
    DehnTwist t;
    const char head = peek();
    if (head == 'g') {
      ++pos_;
      if (is_digit(peek())) {
        const std::size_t at = pos_;
        const std::int64_t index = digits();
        if (index < 1 || index > std::numeric_limits<int>::max()) {
          throw ParseError(at, "curve index must be a positive integer");
        }
        t.curve = Curve::standard(static_cast<int>(index));
      } else {
        t.curve = Curve::gamma();
      }
    } else if (head == 'd') {
      ++pos_;
      t.curve = Curve::delta();
    } else if (done()) {
      throw ParseError(pos_, "expected a twist token");
    } else {
      throw ParseError(pos_, std::string("unexpected character '") + head + "'");
    }

    if (peek() == '^') {
      ++pos_;
      const std::size_t at = pos_;
      bool negative = false;
      if (peek() == '-' || peek() == '+') {
        negative = peek() == '-';
        ++pos_;
      }
      if (!is_digit(peek())) throw ParseError(pos_, "expected an integer exponent");
      const std::int64_t magnitude = digits();
      t.power = negative ? -magnitude : magnitude;
      if (t.power == 0) {
        throw Error(ErrorKind::ZeroExponent,
                    "zero exponent at byte " + std::to_string(at) + " (token at byte " +
                        std::to_string(start) + ")");
      }
    }
    if (!done() && !is_separator(peek())) {
      throw ParseError(pos_, std::string("unexpected character '") + peek() + "'");
    }
    return t;
  }

 private:
  std::int64_t digits() {
    const std::size_t at = pos_;
    while (is_digit(peek())) ++pos_;
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(src_.data() + at, src_.data() + pos_, value);
    if (ec != std::errc{}) throw ParseError(at, "integer out of range");
    (void)ptr;
    return value;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<DehnTwist> parse_twists(std::string_view src) {
  Scanner scan(src);
  std::vector<DehnTwist> out;
  scan.skip_separators();
  while (!scan.done()) {
    out.push_back(scan.token());
    scan.skip_separators();
  }
  return out;
}

TwistWord parse_word(std::string_view src, int genus) {
  return TwistWord::make(genus, parse_twists(src));
}

std::string render_word(const TwistWord& word) {
  std::string out;
  for (const DehnTwist& t : word.twists()) {
    if (!out.empty()) out += ' ';
    switch (t.curve.kind) {
      case CurveKind::Gamma: out += 'g'; break;
      case CurveKind::Delta: out += 'd'; break;
      case CurveKind::Standard: out += 'g' + std::to_string(t.curve.index); break;
    }
    if (t.power != 1) out += '^' + std::to_string(t.power);
  }
  return out;
}

}  // namespace fibered_floer
