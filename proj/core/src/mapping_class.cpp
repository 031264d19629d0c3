#include "fibered_floer/mapping_class.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "fibered_floer/errors.hpp"

namespace fibered_floer {

namespace {

Mat2 gamma_power(std::int64_t m) {
  Mat2 r;
  r.b = BigInt(static_cast<long>(m));
  return r;
}

Mat2 delta_power(std::int64_t n) {
  Mat2 r;
  r.c = -BigInt(static_cast<long>(n));
  return r;
}

std::int64_t abs64(std::int64_t x) { return x < 0 ? -x : x; }

void require_supported(const CaseClass& c) {
  if (const auto* u = std::get_if<cases::Unsupported>(&c)) {
    throw Error(ErrorKind::UnsupportedMappingClass, u->reason);
  }
}

std::vector<Mat2> handle_blocks(const TwistWord& word) {
  std::vector<Mat2> blocks(static_cast<std::size_t>(word.genus()));
  for (const DehnTwist& t : word.twists()) {
    switch (t.curve.kind) {
      case CurveKind::Gamma:
        blocks[0] = blocks[0] * gamma_power(t.power);
        break;
      case CurveKind::Delta:
        blocks[0] = blocks[0] * delta_power(t.power);
        break;
      case CurveKind::Standard: {
        Mat2& b = blocks[static_cast<std::size_t>(t.curve.index - 1)];
        b = b * gamma_power(t.power);
        break;
      }
    }
  }
  return blocks;
}

}  // namespace

TwistWord TwistWord::make(int genus, std::vector<DehnTwist> twists) {
  if (genus <= 2) {
    throw Error(ErrorKind::GenusTooSmall,
                "genus must be at least 3, got " + std::to_string(genus));
  }
  std::vector<DehnTwist> merged;
  merged.reserve(twists.size());
  for (const DehnTwist& t : twists) {
    if (t.power == 0) throw Error(ErrorKind::ZeroExponent, "twist with zero power");
    if (t.curve.kind == CurveKind::Standard && (t.curve.index < 1 || t.curve.index > genus)) {
      throw Error(ErrorKind::InvalidCurve, "standard curve index " +
                                               std::to_string(t.curve.index) +
                                               " outside 1.." + std::to_string(genus));
    }
    if (t.curve.kind != CurveKind::Standard && t.curve.index != 0) {
      throw Error(ErrorKind::InvalidCurve, "gamma/delta curves carry no index");
    }
    if (!merged.empty() && merged.back().curve == t.curve) {
      std::int64_t sum = 0;
      if (__builtin_add_overflow(merged.back().power, t.power, &sum)) {
        throw Error(ErrorKind::PowerOutOfRange, "merged twist power overflows 64 bits");
      }
      if (sum == 0) {
        throw Error(ErrorKind::ZeroExponent, "adjacent twists cancel to a zero power");
      }
      merged.back().power = sum;
    } else {
      merged.push_back(t);
    }
  }
  return TwistWord(genus, std::move(merged));
}

bool TwistWord::transverse_pair_only() const {
  return std::none_of(twists_.begin(), twists_.end(),
                      [](const DehnTwist& t) { return t.curve.kind == CurveKind::Standard; });
}

std::string case_name(const CaseClass& c) {
  struct Visitor {
    std::string operator()(const cases::Product&) const { return "PRODUCT"; }
    std::string operator()(const cases::Single&) const { return "SINGLE"; }
    std::string operator()(const cases::Disjoint&) const { return "DISJOINT"; }
    std::string operator()(const cases::Opposite&) const { return "OPP"; }
    std::string operator()(const cases::Same&) const { return "SAME"; }
    std::string operator()(const cases::Sandwich&) const { return "SANDWICH"; }
    std::string operator()(const cases::Alternating&) const { return "ALTERNATING"; }
    std::string operator()(const cases::Unsupported&) const { return "UNSUPPORTED"; }
  };
  return std::visit(Visitor{}, c);
}

std::string describe(const CaseClass& c) {
  std::ostringstream os;
  os << case_name(c);
  if (const auto* s = std::get_if<cases::Single>(&c)) {
    os << '(' << s->power << ')';
  } else if (const auto* d = std::get_if<cases::Disjoint>(&c)) {
    os << '(';
    for (std::size_t i = 0; i < d->twists.size(); ++i) {
      if (i) os << ',';
      os << '[' << d->twists[i].first << ',' << d->twists[i].second << ']';
    }
    os << ')';
  } else if (const auto* o = std::get_if<cases::Opposite>(&c)) {
    os << '(' << o->m << ',' << o->n << ')';
  } else if (const auto* s2 = std::get_if<cases::Same>(&c)) {
    os << '(' << s2->m << ',' << s2->n << ')';
  } else if (const auto* w = std::get_if<cases::Sandwich>(&c)) {
    os << '(' << w->m1 << ',' << w->n1 << ',' << w->m2 << ')';
  } else if (const auto* a = std::get_if<cases::Alternating>(&c)) {
    os << '(';
    for (std::size_t i = 0; i < a->syllables.size(); ++i) {
      if (i) os << ',';
      os << '[' << a->syllables[i].first << ',' << a->syllables[i].second << ']';
    }
    os << ')';
  } else if (const auto* u = std::get_if<cases::Unsupported>(&c)) {
    os << '(' << u->reason << ')';
  }
  return os.str();
}

bool is_unsupported(const CaseClass& c) { return std::holds_alternative<cases::Unsupported>(c); }

CaseClass classify(const TwistWord& word) {
  const auto twists = word.twists();
  const std::size_t len = twists.size();

  if (len == 0) return cases::Product{};
  if (len == 1) return cases::Single{twists[0].curve, twists[0].power};

  const bool all_standard = std::all_of(twists.begin(), twists.end(), [](const DehnTwist& t) {
    return t.curve.kind == CurveKind::Standard;
  });
  if (all_standard) {
    std::set<int> seen;
    cases::Disjoint d;
    for (const DehnTwist& t : twists) {
      if (!seen.insert(t.curve.index).second) {
        return cases::Unsupported{"standard curve gamma_" + std::to_string(t.curve.index) +
                                  " appears in two separate syllables"};
      }
      d.twists.emplace_back(t.curve.index, t.power);
    }
    return d;
  }

  if (!word.transverse_pair_only()) {
    return cases::Unsupported{"word mixes standard curves with the transverse pair"};
  }
  if (twists[0].curve.kind != CurveKind::Gamma) {
    return cases::Unsupported{"transverse-pair words must start with a twist along gamma"};
  }

  // Normal form guarantees the letters alternate gamma, delta, gamma, ...
  if (len == 2) {
    const std::int64_t m = twists[0].power;
    const std::int64_t n = twists[1].power;
    if ((m < 0) != (n < 0)) return cases::Opposite{m, n};
    return cases::Same{m, n};
  }

  if (len == 3) {
    const std::int64_t m1 = twists[0].power, n1 = twists[1].power, m2 = twists[2].power;
    if (m1 > 0 && n1 > 0 && m2 > 0) return cases::Sandwich{m1, n1, m2};
    return cases::Unsupported{"gamma-delta-gamma words are covered only with all powers positive"};
  }

  if (len % 2 != 0) {
    return cases::Unsupported{"alternating words must end with a twist along delta"};
  }
  const bool gamma_positive = twists[0].power > 0;
  cases::Alternating alt;
  for (std::size_t i = 0; i < len; i += 2) {
    const std::int64_t m = twists[i].power;
    const std::int64_t n = twists[i + 1].power;
    if ((m > 0) != gamma_positive || (n > 0) == gamma_positive) {
      return cases::Unsupported{
          "longer gamma-delta words are covered only when every m_i * n_j < 0"};
    }
    alt.syllables.emplace_back(m, n);
  }
  return alt;
}

H1Action h1_action(const TwistWord& word) {
  if (!word.transverse_pair_only()) {
    throw Error(ErrorKind::UnsupportedCurve,
                "the H_1 block is defined only for words in gamma and delta");
  }
  return H1Action{handle_blocks(word)[0], 2 * word.genus() - 2};
}

IntMatrix full_h1_action(const TwistWord& word) {
  const auto blocks = handle_blocks(word);
  IntMatrix m(2 * blocks.size());
  for (std::size_t h = 0; h < blocks.size(); ++h) m.set_block(2 * h, blocks[h]);
  return m;
}

BigInt lefschetz(const TwistWord& word) {
  require_supported(classify(word));
  // H_0 and H_2 both contribute trace 1 for an orientation-preserving map.
  return BigInt(2) - full_h1_action(word).trace();
}

BigInt abs_trace(const TwistWord& word) {
  if (!word.transverse_pair_only()) {
    throw Error(ErrorKind::UnsupportedCurve,
                "abs_trace is defined only for words in gamma and delta");
  }
  Mat2 product;
  for (const DehnTwist& t : word.twists()) {
    const std::int64_t p = abs64(t.power);
    if (t.curve.kind == CurveKind::Gamma) {
      product = product * gamma_power(p);
    } else {
      product = product * delta_power(-p);
    }
  }
  return product.trace();
}

std::vector<BigInt> symmetric_lefschetz_series(const TwistWord& word, int up_to) {
  if (up_to < 0) throw Error(ErrorKind::LevelOutOfRange, "symmetric power must be non-negative");
  require_supported(classify(word));

  const std::vector<BigInt> numerator = reversed_characteristic_polynomial(full_h1_action(word));
  // 1 / (1 - t)^2 = sum_j (j + 1) t^j
  std::vector<BigInt> out(static_cast<std::size_t>(up_to) + 1);
  for (int n = 0; n <= up_to; ++n) {
    BigInt& coefficient = out[static_cast<std::size_t>(n)];
    for (int i = 0; i <= n && i < static_cast<int>(numerator.size()); ++i) {
      coefficient += numerator[static_cast<std::size_t>(i)] * BigInt(n - i + 1);
    }
  }
  return out;
}

BigInt symmetric_lefschetz(const TwistWord& word, int n) {
  if (n < 0) throw Error(ErrorKind::LevelOutOfRange, "symmetric power must be non-negative");
  return symmetric_lefschetz_series(word, n).back();
}

BigInt turaev_torsion_level(const TwistWord& word, int k) {
  if (k >= word.genus()) {
    throw Error(ErrorKind::LevelOutOfRange,
                "S_k is empty for k >= g (k=" + std::to_string(k) + ")");
  }
  return symmetric_lefschetz(word, word.genus() - 1 - k);
}

}  // namespace fibered_floer
