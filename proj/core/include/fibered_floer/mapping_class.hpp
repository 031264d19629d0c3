#pragma once

// Dehn-twist words on a closed genus-g surface and their action on H_1.
//
// Only three kinds of curve appear: the transverse pair gamma, delta sitting
// in the first handle (intersecting once), and the standard non-separating
// curves gamma_i, one per handle, which are pairwise disjoint.

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "fibered_floer/integer_matrix.hpp"

namespace fibered_floer {

enum class CurveKind : std::uint8_t { Gamma, Delta, Standard };

struct Curve {
  CurveKind kind = CurveKind::Gamma;
  int index = 0;  // handle number for Standard curves, 0 otherwise

  static Curve gamma() { return {CurveKind::Gamma, 0}; }
  static Curve delta() { return {CurveKind::Delta, 0}; }
  static Curve standard(int i) { return {CurveKind::Standard, i}; }

  friend auto operator<=>(const Curve&, const Curve&) = default;
};

struct DehnTwist {
  Curve curve;
  std::int64_t power = 1;  // right-handed count, negative for left-handed

  friend bool operator==(const DehnTwist&, const DehnTwist&) = default;
};

// A mapping class written as a product of powered Dehn twists, composed
// left-to-right as written. Always held in normal form: adjacent twists on
// the same curve are merged.
class TwistWord {
 public:
  // Throws GenusTooSmall for genus <= 2, ZeroExponent if a power is zero
  // before or after merging, InvalidCurve for gamma_i with i outside 1..genus.
  static TwistWord make(int genus, std::vector<DehnTwist> twists);
  static TwistWord identity(int genus) { return make(genus, {}); }

  int genus() const { return genus_; }
  std::span<const DehnTwist> twists() const { return twists_; }
  bool empty() const { return twists_.empty(); }
  std::size_t size() const { return twists_.size(); }

  // True when every twist is along gamma or delta.
  bool transverse_pair_only() const;

  friend bool operator==(const TwistWord&, const TwistWord&) = default;

 private:
  TwistWord(int genus, std::vector<DehnTwist> twists)
      : genus_(genus), twists_(std::move(twists)) {}

  int genus_;
  std::vector<DehnTwist> twists_;
};

namespace cases {

struct Product {
  friend bool operator==(const Product&, const Product&) = default;
};
struct Single {
  Curve curve;
  std::int64_t power;
  friend bool operator==(const Single&, const Single&) = default;
};
struct Disjoint {
  std::vector<std::pair<int, std::int64_t>> twists;  // (handle, power)
  friend bool operator==(const Disjoint&, const Disjoint&) = default;
};
// t_gamma^m t_delta^n with m*n < 0.
struct Opposite {
  std::int64_t m, n;
  friend bool operator==(const Opposite&, const Opposite&) = default;
};
// t_gamma^m t_delta^n with m*n > 0.
struct Same {
  std::int64_t m, n;
  friend bool operator==(const Same&, const Same&) = default;
};
// t_gamma^m1 t_delta^n1 t_gamma^m2, all powers positive.
struct Sandwich {
  std::int64_t m1, n1, m2;
  friend bool operator==(const Sandwich&, const Sandwich&) = default;
};
// t_gamma^m1 t_delta^n1 ... t_gamma^mk t_delta^nk, k >= 2, every m_i*n_j < 0.
struct Alternating {
  std::vector<std::pair<std::int64_t, std::int64_t>> syllables;
  friend bool operator==(const Alternating&, const Alternating&) = default;
};
struct Unsupported {
  std::string reason;
  friend bool operator==(const Unsupported&, const Unsupported&) = default;
};

}  // namespace cases

using CaseClass = std::variant<cases::Product, cases::Single, cases::Disjoint, cases::Opposite,
                               cases::Same, cases::Sandwich, cases::Alternating,
                               cases::Unsupported>;

// Tag name: PRODUCT, SINGLE, DISJOINT, OPP, SAME, SANDWICH, ALTERNATING, UNSUPPORTED.
std::string case_name(const CaseClass& c);
// Tag with parameters, e.g. "OPP(2,-3)".
std::string describe(const CaseClass& c);

bool is_unsupported(const CaseClass& c);

// Action of the word on H_1: a nontrivial block on the first handle, identity
// on the remaining 2g-2 basis vectors.
struct H1Action {
  Mat2 block;
  int trivial_rank = 0;
};

CaseClass classify(const TwistWord& word);

// Throws UnsupportedCurve when the word uses a gamma_i curve.
H1Action h1_action(const TwistWord& word);

// Full 2g x 2g action on H_1 in the symplectic basis a_1, b_1, ..., a_g, b_g.
IntMatrix full_h1_action(const TwistWord& word);

// Lefschetz number 1 - tr(phi_* on H_1) + 1. Throws UnsupportedMappingClass.
BigInt lefschetz(const TwistWord& word);

// Trace of the product with every power replaced by its absolute value.
// Throws UnsupportedCurve for gamma_i words.
BigInt abs_trace(const TwistWord& word);

// L(S^n phi): coefficient of t^n in det(I - tA) / (1 - t)^2.
BigInt symmetric_lefschetz(const TwistWord& word, int n);

// L(S^0 phi), ..., L(S^up_to phi) from one characteristic polynomial.
std::vector<BigInt> symmetric_lefschetz_series(const TwistWord& word, int up_to);

// Torsion summed over the spin^c level S_k, i.e. L(S^{g-1-k} phi).
// Throws LevelOutOfRange for k >= g.
BigInt turaev_torsion_level(const TwistWord& word, int k);

}  // namespace fibered_floer
