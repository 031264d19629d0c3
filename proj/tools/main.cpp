#include <cstdlib>
#include <iostream>
#include <string>

#include <unistd.h>

#include <CLI11.hpp>

#include "cli_app.hpp"

int main(int argc, char** argv) {
  using fibered_floer::cli::Format;
  fibered_floer::cli::CliRequest req;

  CLI::App app{"Perturbed HF+ ranks of Dehn-twist mapping tori in S_{g-2}"};
  std::string format = "text";
  int level = 0;
  app.add_option("-g,--genus", req.genus, "Genus of the fiber surface (at least 3)")->required();
  app.add_option("-w,--word", req.word,
                 "Twist word, e.g. \"g^2 d^-3\", \"g*d*g\", \"g1^2 g3^-1\" (empty = identity)");
  auto* level_opt = app.add_option("-k,--level", level,
                                   "Spin^c level for the census (identity word only unless g-2)");
  app.add_option("-f,--format", format, "Report format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--show-generators", req.show_generators, "List every generator of S_{g-2}");
  app.add_flag("--compare-unperturbed", req.compare_unperturbed,
               "Compare with the known unperturbed rank");
  app.add_flag("--show-torsion-levels", req.show_torsion_levels,
               "Tabulate the torsion at every level 0..g-1");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }

  if (*level_opt) req.level = level;
  req.format = format == "json" ? Format::Json : Format::Text;
  const char* color_env = std::getenv("FIBERED_FLOER_COLOR");
  req.color = isatty(STDOUT_FILENO) && !(color_env && std::string(color_env) == "0");

  return fibered_floer::cli::run(req, std::cout, std::cerr);
}
