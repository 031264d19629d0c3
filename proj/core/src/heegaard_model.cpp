#include "fibered_floer/heegaard_model.hpp"

#include <algorithm>

#include "fibered_floer/errors.hpp"

namespace fibered_floer {

namespace {

std::int64_t abs64(std::int64_t x) { return x < 0 ? -x : x; }

struct PLayout {
  std::int64_t rows = 0;
  std::int64_t cols = 0;
};

void check_size(std::int64_t rows, std::int64_t cols) {
  std::int64_t count = 0;
  if (__builtin_mul_overflow(rows, cols, &count) || count > kMaxSlotPoints - 2) {
    throw Error(ErrorKind::DiagramTooLarge,
                "slot 1 would carry more than " + std::to_string(kMaxSlotPoints) + " points");
  }
}

// Extra alpha_1 cap beta_1 points, laid out as a rows x cols index grid.
PLayout p_layout(const TwistWord& word, const CaseClass& c) {
  PLayout layout;
  if (const auto* o = std::get_if<cases::Opposite>(&c)) {
    layout = {abs64(o->m), abs64(o->n)};
  } else if (const auto* s = std::get_if<cases::Same>(&c)) {
    layout = {abs64(s->m), abs64(s->n)};
  } else if (const auto* w = std::get_if<cases::Sandwich>(&c)) {
    std::int64_t rows = 0;
    if (__builtin_add_overflow(w->m1, w->m2, &rows)) {
      throw Error(ErrorKind::DiagramTooLarge, "sandwich powers overflow");
    }
    layout = {rows, w->n1};
  } else if (std::holds_alternative<cases::Alternating>(c)) {
    // No grid structure is available here; the T - 2 extra points are
    // labelled P(i,1).
    const BigInt extra = abs_trace(word) - 2;
    if (extra > BigInt(static_cast<long>(kMaxSlotPoints - 2))) {
      throw Error(ErrorKind::DiagramTooLarge,
                  "slot 1 would carry more than " + std::to_string(kMaxSlotPoints) + " points");
    }
    layout = {extra.get_si(), 1};
  }
  check_size(layout.rows, layout.cols);
  return layout;
}

}  // namespace

std::string label(const IntersectionPoint& p) {
  const std::string i = std::to_string(p.i);
  switch (p.kind) {
    case PointKind::L: return "L" + i;
    case PointKind::R: return "R" + i;
    case PointKind::P: return "P(" + i + "," + std::to_string(p.j) + ")";
    case PointKind::A: return "A" + i;
    case PointKind::APrime: return "A'" + i;
    case PointKind::B: return "B" + i;
    case PointKind::BPrime: return "B'" + i;
  }
  return "?";
}

const std::vector<IntersectionPoint>& CaseDiagram::slot(int i) const {
  if (i < 1 || i > 2 * genus) {
    throw Error(ErrorKind::SlotOutOfRange,
                "slot " + std::to_string(i) + " outside 1.." + std::to_string(2 * genus));
  }
  return slots[static_cast<std::size_t>(i - 1)];
}

std::vector<IntersectionPoint> CaseDiagram::p_points() const {
  std::vector<IntersectionPoint> out;
  for (const IntersectionPoint& p : slots.front()) {
    if (p.kind == PointKind::P) out.push_back(p);
  }
  return out;
}

CaseDiagram build_diagram(const TwistWord& word) {
  const CaseClass c = classify(word);
  if (const auto* u = std::get_if<cases::Unsupported>(&c)) {
    throw Error(ErrorKind::UnsupportedMappingClass, u->reason);
  }

  const int g = word.genus();
  CaseDiagram d;
  d.genus = g;
  d.case_class = c;
  d.slots.resize(static_cast<std::size_t>(2 * g));
  for (int i = 1; i <= 2 * g; ++i) {
    d.slots[static_cast<std::size_t>(i - 1)] = {IntersectionPoint::l(i), IntersectionPoint::r(i)};
    d.a_points.push_back(IntersectionPoint::a(i));
    d.a_points.push_back(IntersectionPoint::a_prime(i));
    d.b_points.push_back(IntersectionPoint::b(i));
    d.b_points.push_back(IntersectionPoint::b_prime(i));
  }

  const PLayout layout = p_layout(word, c);
  auto& first = d.slots.front();
  first.reserve(static_cast<std::size_t>(2 + layout.rows * layout.cols));
  for (std::int64_t i = 1; i <= layout.rows; ++i)
    for (std::int64_t j = 1; j <= layout.cols; ++j)
      first.push_back(IntersectionPoint::p(static_cast<int>(i), static_cast<int>(j)));

  if (std::holds_alternative<cases::Same>(c) || std::holds_alternative<cases::Sandwich>(c)) {
    d.distinguished = std::pair{static_cast<int>(layout.rows), static_cast<int>(layout.cols)};
  }
  return d;
}

CaseDiagram simplify_isotopy(const CaseDiagram& d) {
  CaseDiagram out = d;
  if (d.simplified) return out;
  out.simplified = true;

  const bool same = std::holds_alternative<cases::Same>(d.case_class);
  const bool sandwich = std::holds_alternative<cases::Sandwich>(d.case_class);
  if (!same && !sandwich) return out;

  const auto [rows, cols] = *d.distinguished;
  const IntersectionPoint cancelled =
      same ? IntersectionPoint::p(rows, cols) : IntersectionPoint::p(1, 1);
  out.removed = {IntersectionPoint::r(1), cancelled};

  std::vector<IntersectionPoint> survivors;
  for (const IntersectionPoint& p : d.slots.front()) {
    if (p.kind == PointKind::P && p != cancelled) survivors.push_back(p);
  }

  if (sandwich) {
    // Shift labels so the missing one is (rows, cols), as in the SAME case.
    int next = 0;
    for (IntersectionPoint& p : survivors) {
      p = IntersectionPoint::p(next / cols + 1, next % cols + 1);
      ++next;
    }
  }

  auto& first = out.slots.front();
  first.clear();
  first.push_back(IntersectionPoint::l(1));
  first.insert(first.end(), survivors.begin(), survivors.end());
  return out;
}

std::size_t intersection_count(const CaseDiagram& d, int i) { return d.slot(i).size(); }

}  // namespace fibered_floer
