#include "fibered_floer/generator_enum.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "fibered_floer/errors.hpp"

namespace fibered_floer {

namespace {

bool is_shifted(const IntersectionPoint& p) { return p.kind != PointKind::L; }

std::vector<std::size_t> shifted_positions(const Generator& g) {
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s < g.coords.size(); ++s)
    if (is_shifted(g.coords[s])) out.push_back(s);
  return out;
}

// Visits every r-subset of {0..n-1} in lexicographic order.
template <typename Fn>
void for_each_combination(std::size_t n, std::size_t r, Fn&& fn) {
  if (r > n) return;
  std::vector<std::size_t> pick(r);
  for (std::size_t i = 0; i < r; ++i) pick[i] = i;
  while (true) {
    fn(pick);
    std::size_t i = r;
    while (i > 0 && pick[i - 1] == n - r + (i - 1)) --i;
    if (i == 0) return;
    ++pick[i - 1];
    for (std::size_t j = i; j < r; ++j) pick[j] = pick[j - 1] + 1;
  }
}

void enumerate_side(const CaseDiagram& d, Side side, std::size_t shifted,
                    std::vector<Generator>& out) {
  const std::vector<int> slots = side_slots(side, d.genus);
  std::vector<std::vector<IntersectionPoint>> base(slots.size());
  std::vector<std::vector<IntersectionPoint>> options(slots.size());
  Generator proto{side, {}};
  for (std::size_t s = 0; s < slots.size(); ++s) {
    const auto& pts = d.slot(slots[s]);
    for (const IntersectionPoint& p : pts) {
      if (is_shifted(p)) {
        options[s].push_back(p);
      } else {
        proto.coords.push_back(p);
      }
    }
    if (proto.coords.size() != s + 1) {
      throw std::logic_error("slot " + std::to_string(slots[s]) + " has no L point");
    }
  }

  for_each_combination(slots.size(), shifted, [&](const std::vector<std::size_t>& pick) {
    std::vector<std::size_t> odometer(pick.size(), 0);
    for (std::size_t p : pick)
      if (options[p].empty()) return;
    while (true) {
      Generator gen = proto;
      for (std::size_t i = 0; i < pick.size(); ++i) gen.coords[pick[i]] = options[pick[i]][odometer[i]];
      out.push_back(std::move(gen));
      std::size_t i = pick.size();
      while (i > 0) {
        --i;
        if (++odometer[i] < options[pick[i]].size()) break;
        odometer[i] = 0;
        if (i == 0) return;
      }
      if (pick.empty()) return;
    }
  });
}

bool census_order(const Generator& x, const Generator& y) {
  if (x.side != y.side) return x.side < y.side;
  if (x.coords.front() != y.coords.front()) return x.coords.front() < y.coords.front();
  const auto px = shifted_positions(x), py = shifted_positions(y);
  if (px != py) return px < py;
  return x.coords < y.coords;
}

// Coordinates on the shared slots 1..2g-2 plus whether the last slot is R.
std::vector<IntersectionPoint> pairing_key(const Generator& g) {
  std::vector<IntersectionPoint> key(g.coords.begin(), g.coords.end() - 1);
  key.push_back(is_shifted(g.coords.back()) ? IntersectionPoint::r(0) : IntersectionPoint::l(0));
  return key;
}

void recount(GeneratorCensus& c) {
  c.pairs_total = c.pairs_fake = c.pairs_essential = 0;
  for (const CensusEntry& e : c.generators) {
    if (e.generator.side != Side::A) continue;
    ++c.pairs_total;
    if (e.status == Fakeness::Fake) {
      ++c.pairs_fake;
    } else {
      ++c.pairs_essential;
    }
  }
}

}  // namespace

std::vector<int> side_slots(Side side, int genus) {
  std::vector<int> out;
  for (int i = 1; i <= 2 * genus - 2; ++i) out.push_back(i);
  out.push_back(side == Side::A ? 2 * genus - 1 : 2 * genus);
  return out;
}

std::pair<IntersectionPoint, IntersectionPoint> Generator::corner_points(int genus) const {
  const int i = side == Side::A ? 2 * genus : 2 * genus - 1;
  return {IntersectionPoint::a(i), IntersectionPoint::b(i)};
}

int spinc_degree(const Generator& gen, int genus) {
  const auto shifted = std::count_if(gen.coords.begin(), gen.coords.end(), is_shifted);
  return (genus - 1) - static_cast<int>(shifted);
}

Fakeness classify_fake(const Generator& gen, int genus) {
  const int last = gen.side == Side::A ? 2 * genus - 1 : 2 * genus;
  return gen.coords.back() == IntersectionPoint::r(last) ? Fakeness::Fake : Fakeness::Essential;
}

GeneratorCensus enumerate_level(const CaseDiagram& d, int k) {
  const int g = d.genus;
  if (k >= g || k < 0) {
    throw Error(ErrorKind::LevelOutOfRange,
                "level " + std::to_string(k) + " outside 0.." + std::to_string(g - 1));
  }
  if (!std::holds_alternative<cases::Product>(d.case_class) && k != g - 2) {
    throw Error(ErrorKind::UnsupportedLevel,
                "only S_{g-2} is available for " + case_name(d.case_class) + " words");
  }

  const auto shifted = static_cast<std::size_t>(g - 1 - k);
  std::vector<Generator> gens;
  enumerate_side(d, Side::A, shifted, gens);
  enumerate_side(d, Side::B, shifted, gens);
  std::sort(gens.begin(), gens.end(), census_order);

  GeneratorCensus census;
  census.level = k;
  census.generators.reserve(gens.size());
  std::map<std::vector<IntersectionPoint>, std::size_t> a_index;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    CensusEntry e{std::move(gens[i]), Fakeness::Essential, 0};
    e.status = classify_fake(e.generator, g);
    if (e.generator.side == Side::A) a_index.emplace(pairing_key(e.generator), i);
    census.generators.push_back(std::move(e));
  }
  for (std::size_t i = 0; i < census.generators.size(); ++i) {
    CensusEntry& e = census.generators[i];
    if (e.generator.side != Side::B) continue;
    const auto it = a_index.find(pairing_key(e.generator));
    if (it == a_index.end()) throw std::logic_error("unpaired B-side generator");
    e.partner = it->second;
    census.generators[it->second].partner = i;
    a_index.erase(it);
  }
  if (!a_index.empty()) throw std::logic_error("unpaired A-side generator");

  recount(census);
  return census;
}

GeneratorCensus subcensus(const GeneratorCensus& census, const std::vector<std::size_t>& picks) {
  GeneratorCensus out;
  out.level = census.level;
  std::unordered_map<std::size_t, std::size_t> remap;
  for (std::size_t i = 0; i < picks.size(); ++i) remap.emplace(picks[i], i);
  for (std::size_t idx : picks) {
    CensusEntry e = census.generators.at(idx);
    const auto it = remap.find(e.partner);
    if (it == remap.end()) throw std::logic_error("subcensus splits a generator pair");
    e.partner = it->second;
    out.generators.push_back(std::move(e));
  }
  recount(out);
  return out;
}

}  // namespace fibered_floer
