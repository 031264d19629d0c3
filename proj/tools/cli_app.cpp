#include "cli_app.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

#include "fibered_floer/word_syntax.hpp"

namespace fibered_floer::cli {

namespace {

using nlohmann::ordered_json;

ordered_json big_json(const BigInt& x) {
  if (x.fits_slong_p()) return static_cast<std::int64_t>(x.get_si());
  return x.get_str();
}

std::string side_name(Side s) { return s == Side::A ? "A" : "B"; }

std::string generator_text(const Generator& gen, int genus) {
  const auto [a, b] = gen.corner_points(genus);
  std::string s = "(" + label(a) + ", " + label(b);
  for (const IntersectionPoint& p : gen.coords) s += ", " + label(p);
  return s + ")";
}

struct TorsionRow {
  int k;
  BigInt tau;
  std::optional<std::uint64_t> essential_pairs;
};

// Everything the two renderers print, computed once so both agree.
struct Report {
  RankResult result;
  std::optional<GeneratorCensus> level_census;
  std::optional<ComparisonReport> comparison;
  std::optional<std::string> comparison_note;
  std::vector<TorsionRow> torsion;
  std::optional<BigInt> abs_trace_value;
};

Report build_report(const CliRequest& req, RankResult result) {
  Report rep{std::move(result), {}, {}, {}, {}, {}};
  const TwistWord& word = rep.result.word;
  const int g = word.genus();

  if (word.transverse_pair_only()) rep.abs_trace_value = abs_trace(word);

  if (req.level && *req.level != g - 2) {
    rep.level_census = enumerate_level(rep.result.diagram, *req.level);
  }
  if (req.compare_unperturbed) {
    try {
      rep.comparison = compare_unperturbed(rep.result);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NoCitedComparison) throw;
      rep.comparison_note = e.what();
    }
  }
  if (req.show_torsion_levels) {
    const bool product = std::holds_alternative<cases::Product>(rep.result.case_class);
    for (int k = 0; k <= g - 1; ++k) {
      TorsionRow row{k, turaev_torsion_level(word, k), {}};
      if (product) row.essential_pairs = enumerate_level(rep.result.diagram, k).pairs_essential;
      rep.torsion.push_back(row);
    }
  }
  return rep;
}

ordered_json census_json(const GeneratorCensus& c) {
  return {{"level", c.level},
          {"total", c.pairs_total},
          {"fake", c.pairs_fake},
          {"essential", c.pairs_essential}};
}

ordered_json to_json(const CliRequest& req, const Report& rep) {
  const RankResult& r = rep.result;
  const int g = r.word.genus();
  ordered_json j;
  j["genus"] = g;
  j["word"] = render_word(r.word);
  j["case"] = case_name(r.case_class);
  j["case_detail"] = describe(r.case_class);
  j["lefschetz"] = big_json(r.lefschetz);
  j["abs_trace"] = rep.abs_trace_value ? big_json(*rep.abs_trace_value) : ordered_json(nullptr);

  ordered_json slots = ordered_json::object();
  for (int i = 1; i <= 2 * g; ++i) {
    ordered_json pts = ordered_json::array();
    for (const IntersectionPoint& p : r.diagram.slot(i)) pts.push_back(label(p));
    slots[std::to_string(i)] = std::move(pts);
  }
  ordered_json removed = ordered_json::array();
  for (const IntersectionPoint& p : r.diagram.removed) removed.push_back(label(p));
  j["diagram"] = {{"simplified", r.diagram.simplified}, {"slots", slots}, {"removed", removed}};

  j["census"] = census_json(r.census);
  ordered_json spinc = ordered_json::array();
  for (const StructureRank& s : r.per_structure) {
    spinc.push_back({{"label", to_string(s.label)},
                     {"chi", big_json(s.chi)},
                     {"pairs", s.essential_pairs},
                     {"rank", s.rank}});
  }
  j["spinc"] = std::move(spinc);
  j["total_rank"] = r.total_rank;

  ordered_json checks = ordered_json::array();
  for (const CrossCheck& c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}});
  j["checks"] = std::move(checks);

  if (rep.level_census) j["level_census"] = census_json(*rep.level_census);
  if (req.compare_unperturbed) {
    if (rep.comparison) {
      j["comparison"] = {{"perturbed", rep.comparison->perturbed_rank},
                         {"unperturbed", big_json(rep.comparison->unperturbed_rank)},
                         {"difference", big_json(rep.comparison->difference)},
                         {"source", rep.comparison->source}};
    } else {
      j["comparison"] = nullptr;
    }
  }
  if (req.show_torsion_levels) {
    ordered_json rows = ordered_json::array();
    for (const TorsionRow& t : rep.torsion) {
      ordered_json row = {{"k", t.k}, {"tau", big_json(t.tau)}};
      if (t.essential_pairs) row["essential_pairs"] = *t.essential_pairs;
      rows.push_back(std::move(row));
    }
    j["torsion"] = std::move(rows);
  }
  if (req.show_generators) {
    ordered_json gens = ordered_json::array();
    for (std::size_t i = 0; i < r.census.generators.size(); ++i) {
      const CensusEntry& e = r.census.generators[i];
      ordered_json coords = ordered_json::array();
      for (const IntersectionPoint& p : e.generator.coords) coords.push_back(label(p));
      gens.push_back({{"index", i},
                      {"side", side_name(e.generator.side)},
                      {"coords", std::move(coords)},
                      {"fake", e.status == Fakeness::Fake},
                      {"partner", e.partner}});
    }
    j["generators"] = std::move(gens);
  }
  return j;
}

const char* kGreen = "\033[32m";
const char* kRed = "\033[31m";
const char* kReset = "\033[0m";

void render_text(const CliRequest& req, const Report& rep, std::ostream& out) {
  const RankResult& r = rep.result;
  const int g = r.word.genus();
  auto row = [&out](const std::string& key) -> std::ostream& {
    return out << std::left << std::setw(14) << key;
  };
  auto status = [&req](bool pass) {
    const std::string word = pass ? "PASS" : "FAIL";
    if (!req.color) return word;
    return std::string(pass ? kGreen : kRed) + word + kReset;
  };

  row("genus") << g << '\n';
  row("word") << (r.word.empty() ? "(identity)" : render_word(r.word)) << '\n';
  row("case") << describe(r.case_class) << '\n';
  row("lefschetz") << r.lefschetz << '\n';
  row("abs_trace") << (rep.abs_trace_value ? rep.abs_trace_value->get_str() : "n/a") << '\n';

  row("diagram") << (r.diagram.simplified ? "simplified" : "unsimplified");
  if (!r.diagram.removed.empty()) {
    out << ", removed";
    for (const IntersectionPoint& p : r.diagram.removed) out << ' ' << label(p);
  }
  out << '\n';
  for (int i = 1; i <= 2 * g; ++i) {
    out << "  slot " << std::setw(3) << std::left << i << ':';
    for (const IntersectionPoint& p : r.diagram.slot(i)) out << ' ' << label(p);
    out << '\n';
  }

  auto census_line = [&](const std::string& key, const GeneratorCensus& c) {
    row(key) << "total " << c.pairs_total << "  fake " << c.pairs_fake << "  essential "
             << c.pairs_essential << '\n';
  };
  census_line("census S_" + std::to_string(r.census.level), r.census);
  if (rep.level_census) census_line("census S_" + std::to_string(rep.level_census->level), *rep.level_census);

  out << "spin^c structures\n";
  out << "  " << std::setw(22) << "label" << std::right << std::setw(8) << "chi" << std::setw(8)
      << "pairs" << std::setw(8) << "rank" << std::left << '\n';
  for (const StructureRank& s : r.per_structure) {
    out << "  " << std::setw(22) << to_string(s.label) << std::right << std::setw(8) << s.chi.get_str()
        << std::setw(8) << s.essential_pairs << std::setw(8) << s.rank << std::left << '\n';
  }
  row("total_rank") << r.total_rank << '\n';

  out << "checks\n";
  for (const CrossCheck& c : r.checks) out << "  [" << status(c.pass) << "] " << c.name << '\n';

  if (req.compare_unperturbed) {
    out << "comparison\n";
    if (rep.comparison) {
      out << "  perturbed    " << rep.comparison->perturbed_rank << '\n'
          << "  unperturbed  " << rep.comparison->unperturbed_rank << '\n'
          << "  difference   " << rep.comparison->difference << '\n'
          << "  source       " << rep.comparison->source << '\n';
    } else {
      out << "  none\n";
    }
  }
  if (req.show_torsion_levels) {
    out << "torsion\n";
    for (const TorsionRow& t : rep.torsion) {
      out << "  k=" << t.k << "  tau=" << t.tau;
      if (t.essential_pairs) out << "  essential_pairs=" << *t.essential_pairs;
      out << '\n';
    }
  }
  if (req.show_generators) {
    out << "generators\n";
    for (std::size_t i = 0; i < r.census.generators.size(); ++i) {
      const CensusEntry& e = r.census.generators[i];
      out << "  #" << i << ' ' << side_name(e.generator.side) << ' '
          << generator_text(e.generator, g) << ' '
          << (e.status == Fakeness::Fake ? "fake" : "essential") << " partner #" << e.partner
          << '\n';
    }
  }
}

void validate_level(const CliRequest& req, const TwistWord& word) {
  if (!req.level) return;
  const int g = word.genus();
  const int k = *req.level;
  if (k >= g || k < 0) {
    throw Error(ErrorKind::LevelOutOfRange,
                "level " + std::to_string(k) + " outside 0.." + std::to_string(g - 1));
  }
  if (k != g - 2 && !word.empty()) {
    throw Error(ErrorKind::UnsupportedLevel,
                "levels other than g-2 are available only for the identity word");
  }
}

}  // namespace

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::ZeroExponent:
    case ErrorKind::PowerOutOfRange:
    case ErrorKind::GenusTooSmall:
    case ErrorKind::InvalidCurve:
    case ErrorKind::LevelOutOfRange:
    case ErrorKind::SlotOutOfRange:
      return 1;
    case ErrorKind::UnsupportedCurve:
    case ErrorKind::UnsupportedMappingClass:
    case ErrorKind::UnsupportedLevel:
    case ErrorKind::UnsupportedCase:
    case ErrorKind::NoCitedComparison:
      return 2;
    case ErrorKind::InconclusiveSandwich:
    case ErrorKind::NonIntegralEvaluation:
      return 3;
    case ErrorKind::DiagramTooLarge:
      return 4;
  }
  return 1;
}

nlohmann::ordered_json report_json(const CliRequest& req, const RankResult& result) {
  return to_json(req, build_report(req, result));
}

int run(const CliRequest& req, std::ostream& out, std::ostream& err) {
  try {
    const TwistWord word = parse_word(req.word, req.genus);
    validate_level(req, word);
    const Report rep = build_report(req, compute_rank(word));

    if (req.format == Format::Json) {
      out << to_json(req, rep).dump(2) << '\n';
    } else {
      render_text(req, rep, out);
    }

    if (!rep.result.all_checks_pass()) {
      for (const CrossCheck& c : rep.result.checks) {
        if (!c.pass) err << "error: cross-check " << c.name << " failed: " << c.detail << '\n';
      }
      return exit_code_for(ErrorKind::InconclusiveSandwich);
    }
    if (rep.comparison_note) err << "note: " << *rep.comparison_note << '\n';
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
}

}  // namespace fibered_floer::cli
