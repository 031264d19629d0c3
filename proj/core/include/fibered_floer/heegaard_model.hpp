#pragma once

// Point-set model of the special genus-(2g+1) Heegaard diagram of a mapping
// torus. Only the intersection points are represented, tagged by type; the
// region structure is not encoded.
//
// Slots 1..2g are the pairs (alpha_i, beta_i). A twist along gamma or delta
// only changes beta_1, so every slot i >= 2 keeps exactly {L_i, R_i}.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fibered_floer/mapping_class.hpp"

namespace fibered_floer {

enum class PointKind : std::uint8_t { L, R, P, A, APrime, B, BPrime };

struct IntersectionPoint {
  PointKind kind = PointKind::L;
  std::int32_t i = 0;
  std::int32_t j = 0;  // second index, P points only

  static IntersectionPoint l(int i) { return {PointKind::L, i, 0}; }
  static IntersectionPoint r(int i) { return {PointKind::R, i, 0}; }
  static IntersectionPoint p(int i, int j) { return {PointKind::P, i, j}; }
  static IntersectionPoint a(int i) { return {PointKind::A, i, 0}; }
  static IntersectionPoint a_prime(int i) { return {PointKind::APrime, i, 0}; }
  static IntersectionPoint b(int i) { return {PointKind::B, i, 0}; }
  static IntersectionPoint b_prime(int i) { return {PointKind::BPrime, i, 0}; }

  friend auto operator<=>(const IntersectionPoint&, const IntersectionPoint&) = default;
};

// "L1", "R4", "P(2,3)", "A6", "A'6", "B5", "B'5".
std::string label(const IntersectionPoint& p);

// Upper bound on the number of points materialized on slot 1.
inline constexpr std::int64_t kMaxSlotPoints = std::int64_t{1} << 17;

struct CaseDiagram {
  int genus = 0;
  CaseClass case_class;
  // slots[s] holds the alpha_{s+1} cap beta_{s+1} points, in canonical order.
  std::vector<std::vector<IntersectionPoint>> slots;
  std::vector<IntersectionPoint> a_points;  // alpha_{2g+1} cap beta_i
  std::vector<IntersectionPoint> b_points;  // alpha_i cap beta_{2g+1}
  std::vector<IntersectionPoint> removed;   // cancelled by the isotopy on beta_1
  // Reserved P label of the distinguished spin^c structure (SAME, SANDWICH).
  std::optional<std::pair<int, int>> distinguished;
  bool simplified = false;

  const std::vector<IntersectionPoint>& slot(int i) const;
  std::vector<IntersectionPoint> p_points() const;
};

// Throws UnsupportedMappingClass, or DiagramTooLarge when slot 1 would exceed
// kMaxSlotPoints.
CaseDiagram build_diagram(const TwistWord& word);

// Cancels the bigon on beta_1 for SAME and SANDWICH; identity otherwise.
// Idempotent.
CaseDiagram simplify_isotopy(const CaseDiagram& d);

// Throws SlotOutOfRange unless 1 <= i <= 2g.
std::size_t intersection_count(const CaseDiagram& d, int i);

}  // namespace fibered_floer
