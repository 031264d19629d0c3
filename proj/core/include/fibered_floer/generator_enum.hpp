#pragma once

// Floer generators of the special Heegaard diagram, sorted by spin^c level.
//
// Every generator uses one of two fixed choices on alpha_{2g+1}/beta_{2g+1}:
// the A-side takes (A_{2g}, B_{2g}) and then one point on each slot
// 1..2g-1; the B-side takes (A_{2g-1}, B_{2g-1}) and one point on each slot
// 1..2g-2, 2g. An A-side and a B-side generator with the same pattern form
// a pair.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fibered_floer/heegaard_model.hpp"

namespace fibered_floer {

enum class Side : std::uint8_t { A, B };

// Slot indices (1-based) a side chooses points on, in coordinate order.
std::vector<int> side_slots(Side side, int genus);

struct Generator {
  Side side = Side::A;
  std::vector<IntersectionPoint> coords;  // coords[s] lies on side_slots(side)[s]

  // The two points on alpha_{2g+1} and beta_{2g+1} fixed by the side.
  std::pair<IntersectionPoint, IntersectionPoint> corner_points(int genus) const;

  friend bool operator==(const Generator&, const Generator&) = default;
};

enum class Fakeness : std::uint8_t { Fake, Essential };

// k = (g - 1) - (number of R or P coordinates).
int spinc_degree(const Generator& gen, int genus);

// A generator is fake when its last slot (2g-1 on the A-side, 2g on the
// B-side) carries R: such pairs bound the disk D' that misses the basepoint.
Fakeness classify_fake(const Generator& gen, int genus);

struct CensusEntry {
  Generator generator;
  Fakeness status = Fakeness::Essential;
  std::size_t partner = 0;  // index of the paired generator in the census
};

struct GeneratorCensus {
  int level = 0;
  std::uint64_t pairs_total = 0;
  std::uint64_t pairs_fake = 0;
  std::uint64_t pairs_essential = 0;
  // A-side first, then B-side; within a side ordered by slot-1 point and then
  // by the positions of the non-L coordinates.
  std::vector<CensusEntry> generators;
};

// All generators of level k with their pairing. PRODUCT diagrams accept
// 0 <= k < g; every other case accepts only k = g - 2.
// Throws LevelOutOfRange or UnsupportedLevel.
GeneratorCensus enumerate_level(const CaseDiagram& d, int k);

// Rebuilds counts and partner links for a subset of a census.
GeneratorCensus subcensus(const GeneratorCensus& census, const std::vector<std::size_t>& picks);

}  // namespace fibered_floer
