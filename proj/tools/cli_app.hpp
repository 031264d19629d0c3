#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "fibered_floer/errors.hpp"
#include "fibered_floer/rank_engine.hpp"

#include <json.hpp>

namespace fibered_floer::cli {

enum class Format { Text, Json };

struct CliRequest {
  int genus = 3;
  std::string word;
  std::optional<int> level;  // defaults to g - 2
  Format format = Format::Text;
  bool show_generators = false;
  bool compare_unperturbed = false;
  bool show_torsion_levels = false;
  bool color = false;
};

// 0 success, 1 bad input, 2 unsupported mapping class or level,
// 3 inconclusive sandwich or failed cross-check, 4 resource limit.
int exit_code_for(ErrorKind kind);

// Report goes to out, diagnostics to err. Returns the exit status.
int run(const CliRequest& req, std::ostream& out, std::ostream& err);

// JSON form of a report; also used by tests.
nlohmann::ordered_json report_json(const CliRequest& req, const RankResult& result);

}  // namespace fibered_floer::cli
