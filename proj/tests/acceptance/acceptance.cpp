// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <algorithm>
#include <functional>
#include <optional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli_app.hpp"
#include "fibered_floer/errors.hpp"
#include "fibered_floer/rank_engine.hpp"
#include "fibered_floer/word_syntax.hpp"
#include "grids.hpp"
#include "oracle.hpp"

namespace ff = fibered_floer;
namespace oracle = fibered_floer::oracle;
using ff::BigInt;
using ff::TwistWord;

namespace {

// Collects the first few mismatches of a criterion.
class Tally {
 public:
  void expect(bool ok, const std::function<std::string()>& what) {
    ++cases_;
    if (ok) return;
    ++failures_;
    if (notes_.size() < 3) notes_.push_back(what());
  }
  bool ok() const { return failures_ == 0 && cases_ > 0; }
  std::string summary() const {
    std::string s = std::to_string(cases_) + " checks";
    if (failures_) s += ", " + std::to_string(failures_) + " failed";
    for (const std::string& n : notes_) s += "; " + n;
    return s;
  }

 private:
  std::uint64_t cases_ = 0;
  std::uint64_t failures_ = 0;
  std::vector<std::string> notes_;
};

std::string tag(const TwistWord& w) {
  return "g=" + std::to_string(w.genus()) + " [" + ff::render_word(w) + "]";
}

BigInt big(std::uint64_t x) { return BigInt(static_cast<unsigned long>(x)); }

std::string str(const BigInt& x) { return x.get_str(); }
std::string str(const oracle::Integer& x) { return x.str(); }

BigInt from_oracle(const oracle::Integer& x) { return BigInt(x.str()); }

// Runs compute_rank and records a failure instead of propagating.
std::optional<ff::RankResult> rank_of(Tally& t, const TwistWord& w) {
  std::optional<ff::RankResult> out;
  try {
    out = ff::compute_rank(w);
  } catch (const std::exception& e) {
    t.expect(false, [&] { return tag(w) + " threw " + e.what(); });
    return out;
  }
  t.expect(out->all_checks_pass(), [&] { return tag(w) + " cross-check failed"; });
  return out;
}

Tally criterion1() {
  Tally t;
  for (const auto& words : {ff::grids::single_words(), ff::grids::disjoint_words()})
    for (const TwistWord& w : words) {
      const auto maybe = rank_of(t, w);
      if (!maybe) continue;
      const ff::RankResult& r = *maybe;
      t.expect(big(r.total_rank) == 2 * w.genus() - 2,
               [&] { return tag(w) + " rank " + std::to_string(r.total_rank); });
    }
  return t;
}

Tally criterion2() {
  Tally t;
  for (const TwistWord& w : ff::grids::opposite_words()) {
    const auto maybe = rank_of(t, w);
    if (!maybe) continue;
    const ff::RankResult& r = *maybe;
    const auto& o = std::get<ff::cases::Opposite>(r.case_class);
    const BigInt g = w.genus();
    const BigInt mn = BigInt(static_cast<long>(o.m)) * BigInt(static_cast<long>(o.n));
    t.expect(big(r.total_rank) == 2 * g - 2 + abs(mn), [&] { return tag(w) + " rank"; });
    const BigInt chi = 2 - 2 * g + mn;
    t.expect(big(r.census.pairs_essential) == abs(chi), [&] { return tag(w) + " essential"; });
    t.expect(abs(r.lefschetz) == abs(chi), [&] { return tag(w) + " |chi|"; });
  }
  return t;
}

Tally criterion3() {
  Tally t;
  for (const TwistWord& w : ff::grids::same_words()) {
    const auto maybe = rank_of(t, w);
    if (!maybe) continue;
    const ff::RankResult& r = *maybe;
    const auto& s = std::get<ff::cases::Same>(r.case_class);
    const std::int64_t g = w.genus();
    const std::int64_t mn = s.m * s.n;
    std::int64_t indexed = 0;
    BigInt chi_sum = 0;
    bool shape_ok = true;
    for (const ff::StructureRank& sr : r.per_structure) {
      chi_sum += sr.chi;
      if (sr.label.kind == ff::SpinCLabel::Kind::Indexed) {
        ++indexed;
        shape_ok = shape_ok && sr.rank == 1;
      } else if (sr.label.kind == ff::SpinCLabel::Kind::Distinguished) {
        shape_ok = shape_ok && sr.rank == static_cast<std::uint64_t>(2 * g - 3) &&
                   sr.chi == BigInt(static_cast<long>(3 - 2 * g));
      } else {
        shape_ok = false;
      }
    }
    t.expect(indexed == mn - 1, [&] { return tag(w) + " indexed buckets " + std::to_string(indexed); });
    t.expect(shape_ok, [&] { return tag(w) + " bucket ranks/chi"; });
    t.expect(r.per_structure.size() == static_cast<std::size_t>(mn),
             [&] { return tag(w) + " bucket count"; });
    t.expect(big(r.total_rank) == BigInt(static_cast<long>(2 * g - 4 + mn)),
             [&] { return tag(w) + " total"; });
    t.expect(chi_sum == BigInt(static_cast<long>(2 - 2 * g + mn)), [&] { return tag(w) + " chi sum"; });
  }
  return t;
}

Tally criterion4() {
  Tally t;
  using Pt = ff::IntersectionPoint;
  for (const TwistWord& w : ff::grids::sandwich_words()) {
    const auto maybe = rank_of(t, w);
    if (!maybe) continue;
    const ff::RankResult& r = *maybe;
    const auto& s = std::get<ff::cases::Sandwich>(r.case_class);
    const std::int64_t g = w.genus();
    const std::int64_t grid = (s.m1 + s.m2) * s.n1;
    t.expect(big(r.total_rank) == BigInt(static_cast<long>(2 * g - 4 + grid)),
             [&] { return tag(w) + " total " + std::to_string(r.total_rank); });
    t.expect(r.per_structure.size() == static_cast<std::size_t>(grid),
             [&] { return tag(w) + " buckets " + std::to_string(r.per_structure.size()); });
    std::vector<Pt> removed = r.diagram.removed;
    std::sort(removed.begin(), removed.end());
    std::vector<Pt> want = {Pt::r(1), Pt::p(1, 1)};
    std::sort(want.begin(), want.end());
    t.expect(removed == want, [&] { return tag(w) + " isotopy removed the wrong points"; });
  }
  return t;
}

Tally criterion5() {
  Tally t;
  for (const TwistWord& w : ff::grids::alternating_words()) {
    const auto maybe = rank_of(t, w);
    if (!maybe) continue;
    const ff::RankResult& r = *maybe;
    const BigInt g = w.genus();
    const BigInt T = from_oracle(oracle::brute_trace(w, true));
    const BigInt signed_T = from_oracle(oracle::brute_trace(w, false));
    t.expect(big(r.total_rank) == 2 * g - 4 + T,
             [&] { return tag(w) + " rank " + std::to_string(r.total_rank) + " T " + str(T); });
    t.expect(r.lefschetz == 4 - 2 * g - signed_T, [&] { return tag(w) + " lefschetz"; });
    t.expect(abs(r.lefschetz) == big(r.total_rank), [&] { return tag(w) + " |L| != rank"; });
  }
  return t;
}

Tally criterion6() {
  Tally t;
  for (int g = 3; g <= 7; ++g) {
    const ff::CaseDiagram d = ff::build_diagram(TwistWord::identity(g));
    for (int k = 0; k <= g + 1; ++k) {
      const std::string at = "g=" + std::to_string(g) + " k=" + std::to_string(k);
      const oracle::BruteCounts b = oracle::brute_enumerate(d, k);
      if (k >= g) {
        t.expect(b.generators == 0, [&] { return at + " oracle level not empty"; });
        bool rejected = false;
        try {
          ff::enumerate_level(d, k);
        } catch (const ff::Error& e) {
          rejected = e.kind() == ff::ErrorKind::LevelOutOfRange;
        }
        t.expect(rejected, [&] { return at + " enumerate_level accepted k >= g"; });
        continue;
      }
      const ff::GeneratorCensus c = ff::enumerate_level(d, k);
      const oracle::Integer total = oracle::pascal_binomial(2 * g - 1, g - 1 - k);
      const oracle::Integer fake = oracle::pascal_binomial(2 * g - 2, g - 2 - k);
      const oracle::Integer essential = oracle::pascal_binomial(2 * g - 2, g - 1 - k);
      for (const auto& [name, main, brute, want] :
           {std::tuple{"total", c.pairs_total, b.pairs_total, total},
            std::tuple{"fake", c.pairs_fake, b.pairs_fake, fake},
            std::tuple{"essential", c.pairs_essential, b.pairs_essential, essential}}) {
        t.expect(oracle::Integer(main) == want && oracle::Integer(brute) == want,
                 [&, name = name] { return at + " " + name + " count"; });
      }
      t.expect(b.unmatched == 0, [&] { return at + " unmatched generators"; });
    }
  }
  return t;
}

Tally criterion7() {
  Tally t;
  for (int g = 3; g <= 6; ++g) {
    const TwistWord id = TwistWord::identity(g);
    const ff::CaseDiagram d = ff::build_diagram(id);
    for (int k = 0; k <= g - 1; ++k) {
      const BigInt tau = ff::turaev_torsion_level(id, k);
      const BigInt essential = big(ff::enumerate_level(d, k).pairs_essential);
      const BigInt binom = from_oracle(oracle::pascal_binomial(2 * g - 2, g - 1 - k));
      const BigInt sign = (g - 1 - k) % 2 == 0 ? 1 : -1;
      t.expect(abs(tau) == essential && tau == sign * binom, [&] {
        return "identity g=" + std::to_string(g) + " k=" + std::to_string(k) + " tau " + str(tau);
      });
    }
  }
  for (const TwistWord& w : ff::grids::all_grid_words()) {
    t.expect(ff::turaev_torsion_level(w, w.genus() - 2) == ff::lefschetz(w),
             [&] { return tag(w) + " torsion at g-2"; });
  }
  return t;
}

Tally criterion8() {
  Tally t;
  auto census_matches = [&](const ff::CaseDiagram& d, int k, const std::string& at) {
    const ff::GeneratorCensus c = ff::enumerate_level(d, k);
    const oracle::BruteCounts b = oracle::brute_enumerate(d, k);
    t.expect(c.generators.size() == b.generators && c.pairs_total == b.pairs_total &&
                 c.pairs_fake == b.pairs_fake && c.pairs_essential == b.pairs_essential &&
                 b.unmatched == 0,
             [&] { return at + " census differs from brute force"; });
  };

  for (const TwistWord& w : ff::grids::all_grid_words()) {
    const int g = w.genus();
    const ff::CaseDiagram d = ff::simplify_isotopy(ff::build_diagram(w));
    census_matches(d, g - 2, tag(w));

    if (w.transverse_pair_only()) {
      t.expect(str(ff::h1_action(w).block.trace()) == str(oracle::brute_trace(w, false)),
               [&] { return tag(w) + " h1 trace"; });
      t.expect(str(ff::abs_trace(w)) == str(oracle::brute_trace(w, true)),
               [&] { return tag(w) + " abs_trace"; });
    }
    const std::vector<oracle::Block> handles = oracle::brute_handle_blocks(w);
    oracle::Integer trace = 0;
    for (const oracle::Block& h : handles) trace += h.a + h.d;
    t.expect(str(ff::full_h1_action(w).trace()) == str(trace), [&] { return tag(w) + " full trace"; });

    const std::vector<oracle::Integer> series = oracle::series_coefficients(handles, g, 2 * g);
    const std::vector<BigInt> main_series = ff::symmetric_lefschetz_series(w, 2 * g);
    for (int n = 0; n <= 2 * g; ++n) {
      t.expect(str(main_series[static_cast<std::size_t>(n)]) == str(series[static_cast<std::size_t>(n)]),
               [&] { return tag(w) + " S^" + std::to_string(n) + " Lefschetz"; });
    }
  }
  for (int g = 3; g <= 7; ++g) {
    const ff::CaseDiagram d = ff::build_diagram(TwistWord::identity(g));
    for (int k = 0; k < g; ++k) census_matches(d, k, "identity g=" + std::to_string(g));
  }
  return t;
}

Tally criterion9() {
  Tally t;
  auto check = [&](const std::vector<TwistWord>& words, long want) {
    for (const TwistWord& w : words) {
      const auto maybe = rank_of(t, w);
      if (!maybe) continue;
      const ff::RankResult& r = *maybe;
      try {
        const ff::ComparisonReport c = ff::compare_unperturbed(r);
        t.expect(c.difference == want, [&] { return tag(w) + " difference " + str(c.difference); });
      } catch (const std::exception& e) {
        t.expect(false, [&] { return tag(w) + " " + e.what(); });
      }
    }
  };
  check(ff::grids::single_words(), 2);
  check(ff::grids::opposite_words(), 0);
  check(ff::grids::same_words(), 2);
  return t;
}

int run_cli(int genus, const std::string& word, std::string& diagnostics) {
  ff::cli::CliRequest req;
  req.genus = genus;
  req.word = word;
  std::ostringstream out, err;
  const int code = ff::cli::run(req, out, err);
  diagnostics = err.str();
  return code;
}

Tally criterion10() {
  Tally t;
  std::string diag;
  for (const char* w : {"g d g^-1", "g^2 d^-1 g", "g^-1 d g", "g d^-2 g^3", "g^-2 d^-1 g^-1"}) {
    for (int g = 3; g <= 5; ++g) {
      const int code = run_cli(g, w, diag);
      t.expect(code == 2 && diag.find("UnsupportedMappingClass") != std::string::npos,
               [&] { return std::string(w) + " exit " + std::to_string(code); });
    }
  }
  const int code = run_cli(2, "g", diag);
  t.expect(code != 0 && diag.find("GenusTooSmall") != std::string::npos,
           [&] { return "genus 2 exit " + std::to_string(code) + ": " + diag; });

  // Doctored census: one essential pair more than |chi| allows.
  const TwistWord w = TwistWord::make(3, {ff::grids::gamma_twist(2), ff::grids::delta_twist(2)});
  const ff::CaseDiagram d = ff::simplify_isotopy(ff::build_diagram(w));
  ff::Partition parts = ff::partition(d, ff::enumerate_level(d, 1));
  const std::vector<BigInt> chi = ff::euler_per_structure(parts, ff::lefschetz(w));
  parts.back().census.pairs_essential += 1;
  bool raised = false;
  try {
    ff::rank_structures(parts, chi);
  } catch (const ff::Error& e) {
    raised = e.kind() == ff::ErrorKind::InconclusiveSandwich &&
             ff::cli::exit_code_for(e.kind()) == 3;
  }
  t.expect(raised, [] { return std::string("synthetic census did not raise InconclusiveSandwich"); });
  return t;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Tally()>>> criteria = {
      {"single twists and disjoint collections rank 2g-2", criterion1},
      {"opposite-sign pairs rank 2g-2+|mn|", criterion2},
      {"same-sign pairs split into mn structures", criterion3},
      {"sandwich words rank 2g-4+(m1+m2)n1", criterion4},
      {"alternating words rank 2g-4+T", criterion5},
      {"product census is binomial at every level", criterion6},
      {"torsion levels match the census and the Lefschetz number", criterion7},
      {"main computations equal the brute-force oracle", criterion8},
      {"differences against unperturbed ranks", criterion9},
      {"unsupported and inconclusive inputs are rejected", criterion10},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Tally t;
    try {
      t = criteria[i].second();
    } catch (const std::exception& e) {
      t.expect(false, [&] { return std::string("uncaught: ") + e.what(); });
    }
    if (!t.ok()) ++failed;
    std::cout << (t.ok() ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].first
              << " (" << t.summary() << ")\n";
  }
  return failed == 0 ? 0 : 1;
}
