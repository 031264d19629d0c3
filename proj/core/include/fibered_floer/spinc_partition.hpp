#pragma once

// Splitting the level S_{g-2} into individual spin^c structures, and the
// first Chern class evaluation on a periodic domain.

#include <compare>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "fibered_floer/generator_enum.hpp"

namespace fibered_floer {

struct SpinCLabel {
  enum class Kind : std::uint8_t { Indexed, Distinguished, Aggregate };

  Kind kind = Kind::Aggregate;
  int i = 0;  // Indexed / Distinguished: P-grid label; Aggregate: level k
  int j = 0;

  static SpinCLabel aggregate(int level) { return {Kind::Aggregate, level, 0}; }
  static SpinCLabel indexed(int i, int j) { return {Kind::Indexed, i, j}; }
  static SpinCLabel distinguished(int i, int j) { return {Kind::Distinguished, i, j}; }

  friend auto operator<=>(const SpinCLabel&, const SpinCLabel&) = default;
};

// "INDEXED(1,2)", "DISTINGUISHED(2,2)", "AGGREGATE(1)".
std::string to_string(const SpinCLabel& label);

struct SpinCBucket {
  SpinCLabel label;
  GeneratorCensus census;
};

using Partition = std::vector<SpinCBucket>;

// Indexed buckets in label order, then the distinguished bucket. Cases other
// than SAME and SANDWICH yield one aggregate bucket.
// Throws UnsupportedCase for an unsimplified SAME/SANDWICH diagram and
// UnsupportedLevel unless the census is at level g-2.
Partition partition(const CaseDiagram& d, const GeneratorCensus& census);

// Euler characteristic of each bucket given the level total L: +1 per indexed
// bucket and the remainder on the distinguished one, so the values sum to L.
std::vector<BigInt> euler_per_structure(const Partition& parts, const BigInt& lefschetz_number);

// Periodic domain data needed by the first Chern class formula. All
// measures are rationals; point measures are multiples of 1/4.
struct PeriodicDomainData {
  mpq_class euler_measure{0};
  BigInt basepoint_mult{0};
  std::map<IntersectionPoint, mpq_class> point_measures;

  friend PeriodicDomainData operator+(const PeriodicDomainData& x, const PeriodicDomainData& y);
  friend PeriodicDomainData operator*(const BigInt& s, const PeriodicDomainData& x);
};

// Local multiplicity of a domain at a corner point: the average of the four
// quadrant multiplicities around it.
mpq_class point_measure_from_quadrants(const BigInt& q1, const BigInt& q2, const BigInt& q3,
                                       const BigInt& q4);

// <c_1(s_y), [P]> = chi(P) - 2 n_z(P) + 2 sum_{p in y} n_p(P), summed over
// every point of the generator including its alpha_{2g+1}/beta_{2g+1} pair.
// Points without a measure count as 0. Throws NonIntegralEvaluation.
BigInt chern_eval(const PeriodicDomainData& domain, const Generator& gen, int genus);

}  // namespace fibered_floer
