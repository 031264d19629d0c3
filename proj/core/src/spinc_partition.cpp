#include "fibered_floer/spinc_partition.hpp"

#include "fibered_floer/errors.hpp"

namespace fibered_floer {

namespace {

bool quarter_integral(const mpq_class& q) {
  mpq_class scaled = q * 4;
  scaled.canonicalize();
  return scaled.get_den() == 1;
}

}  // namespace

std::string to_string(const SpinCLabel& label) {
  switch (label.kind) {
    case SpinCLabel::Kind::Indexed:
      return "INDEXED(" + std::to_string(label.i) + "," + std::to_string(label.j) + ")";
    case SpinCLabel::Kind::Distinguished:
      return "DISTINGUISHED(" + std::to_string(label.i) + "," + std::to_string(label.j) + ")";
    case SpinCLabel::Kind::Aggregate:
      return "AGGREGATE(" + std::to_string(label.i) + ")";
  }
  return "?";
}

Partition partition(const CaseDiagram& d, const GeneratorCensus& census) {
  if (census.level != d.genus - 2) {
    throw Error(ErrorKind::UnsupportedLevel, "spin^c partition is defined on S_{g-2} only");
  }
  const bool split = std::holds_alternative<cases::Same>(d.case_class) ||
                     std::holds_alternative<cases::Sandwich>(d.case_class);
  if (!split) return {SpinCBucket{SpinCLabel::aggregate(census.level), census}};
  if (!d.simplified) {
    throw Error(ErrorKind::UnsupportedCase,
                "partition needs the simplified diagram for " + describe(d.case_class));
  }

  const auto [di, dj] = *d.distinguished;
  std::map<SpinCLabel, std::vector<std::size_t>> members;
  members[SpinCLabel::distinguished(di, dj)];
  for (std::size_t idx = 0; idx < census.generators.size(); ++idx) {
    const IntersectionPoint& first = census.generators[idx].generator.coords.front();
    const SpinCLabel key = first.kind == PointKind::P ? SpinCLabel::indexed(first.i, first.j)
                                                      : SpinCLabel::distinguished(di, dj);
    members[key].push_back(idx);
  }

  Partition out;
  out.reserve(members.size());
  for (const auto& [label, picks] : members) out.push_back({label, subcensus(census, picks)});
  return out;
}

std::vector<BigInt> euler_per_structure(const Partition& parts, const BigInt& lefschetz_number) {
  std::vector<BigInt> chi(parts.size());
  BigInt indexed = 0;
  for (const SpinCBucket& b : parts)
    if (b.label.kind == SpinCLabel::Kind::Indexed) ++indexed;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    switch (parts[i].label.kind) {
      case SpinCLabel::Kind::Indexed: chi[i] = 1; break;
      case SpinCLabel::Kind::Distinguished: chi[i] = lefschetz_number - indexed; break;
      case SpinCLabel::Kind::Aggregate: chi[i] = lefschetz_number; break;
    }
  }
  return chi;
}

PeriodicDomainData operator+(const PeriodicDomainData& x, const PeriodicDomainData& y) {
  PeriodicDomainData r = x;
  r.euler_measure += y.euler_measure;
  r.basepoint_mult += y.basepoint_mult;
  for (const auto& [p, m] : y.point_measures) r.point_measures[p] += m;
  return r;
}

PeriodicDomainData operator*(const BigInt& s, const PeriodicDomainData& x) {
  PeriodicDomainData r = x;
  r.euler_measure *= s;
  r.basepoint_mult *= s;
  for (auto& [p, m] : r.point_measures) m *= s;
  return r;
}

mpq_class point_measure_from_quadrants(const BigInt& q1, const BigInt& q2, const BigInt& q3,
                                       const BigInt& q4) {
  mpq_class r(BigInt(q1 + q2 + q3 + q4), BigInt(4));
  r.canonicalize();
  return r;
}

BigInt chern_eval(const PeriodicDomainData& domain, const Generator& gen, int genus) {
  auto measure = [&](const IntersectionPoint& p) -> mpq_class {
    const auto it = domain.point_measures.find(p);
    if (it == domain.point_measures.end()) return 0;
    if (!quarter_integral(it->second)) {
      throw Error(ErrorKind::NonIntegralEvaluation,
                  "point measure at " + label(p) + " is not a multiple of 1/4");
    }
    return it->second;
  };

  mpq_class sum = 0;
  for (const IntersectionPoint& p : gen.coords) sum += measure(p);
  const auto [a, b] = gen.corner_points(genus);
  sum += measure(a);
  sum += measure(b);

  mpq_class value = domain.euler_measure - 2 * mpq_class(domain.basepoint_mult) + 2 * sum;
  value.canonicalize();
  if (value.get_den() != 1) {
    throw Error(ErrorKind::NonIntegralEvaluation,
                "Chern class evaluation " + value.get_str() + " is not an integer");
  }
  return value.get_num();
}

}  // namespace fibered_floer
