#pragma once

// Rank of the perturbed HF^+ in S_{g-2}, one spin^c structure at a time.
//
// Within each structure the rank is bounded below by |chi| (the torsion /
// Lefschetz count) and above by the number of essential generator pairs;
// the engine returns a rank only when the two bounds coincide. The
// coefficient module is never represented, only the exponent r of A^r.

#include <cstdint>
#include <string>
#include <vector>

#include "fibered_floer/generator_enum.hpp"
#include "fibered_floer/heegaard_model.hpp"
#include "fibered_floer/mapping_class.hpp"
#include "fibered_floer/spinc_partition.hpp"

namespace fibered_floer {

struct StructureRank {
  SpinCLabel label;
  BigInt chi;
  std::uint64_t essential_pairs = 0;
  std::uint64_t fake_pairs = 0;
  std::uint64_t rank = 0;
};

struct CrossCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct RankResult {
  TwistWord word;
  CaseClass case_class;
  BigInt lefschetz;
  CaseDiagram diagram;  // after the isotopy
  GeneratorCensus census;
  std::vector<StructureRank> per_structure;
  std::uint64_t total_rank = 0;
  std::vector<CrossCheck> checks;

  bool all_checks_pass() const;
};

// |chi| when it equals the number of essential pairs; throws
// InconclusiveSandwich otherwise.
std::uint64_t sandwich_rank(const BigInt& chi, std::uint64_t essential_pairs);

// Applies the sandwich bound bucket by bucket. chi must line up with parts.
std::vector<StructureRank> rank_structures(const Partition& parts, const std::vector<BigInt>& chi);

// Closed-form rank for the case, e.g. 2g-2+|mn| for OPP and 2g-4+T for
// ALTERNATING. Throws UnsupportedMappingClass.
BigInt theorem_rank(const TwistWord& word);

// Closed-form count of essential pairs in S_{g-2} of the simplified diagram.
BigInt closed_form_essential_pairs(const TwistWord& word);

// Full pipeline: classify, build and simplify the diagram, enumerate S_{g-2},
// partition, and rank each structure. Throws UnsupportedMappingClass,
// InconclusiveSandwich, GenusTooSmall (via TwistWord) or DiagramTooLarge.
RankResult compute_rank(const TwistWord& word);

struct ComparisonReport {
  std::uint64_t perturbed_rank = 0;
  BigInt unperturbed_rank;
  BigInt difference;  // unperturbed - perturbed
  std::string source;
};

// Against the published unperturbed ranks: SINGLE 2g, OPP 2g-2+|mn|,
// SAME 2g-2+mn. Throws NoCitedComparison for every other case.
ComparisonReport compare_unperturbed(const RankResult& r);

}  // namespace fibered_floer
