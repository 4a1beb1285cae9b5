// rmw: command-line front end of the rigid-object mutation workbench.
//
// Every command prints a deterministic JSON report (or Markdown with
// --format md) on stdout and, when an output directory is given (--out or
// the RMW_OUTPUT_DIR environment variable), writes the report together with
// DOT and Markdown artifacts there.
//
// Exit status: 0 all checks passed, 1 a verification failed (the report
// carries a witness), 2 invalid input.
#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "rmw/presets.hpp"

namespace {

using rmw::cli::Outcome;

int emit(const Outcome& o, const std::string& format, const std::string& out_flag) {
  if (format == "md")
    std::cout << rmw::cli::to_markdown(o.report);
  else
    std::cout << o.report.dump(2) << "\n";
  std::optional<std::string> dir = rmw::cli::output_dir(out_flag);
  if (!dir) dir = o.out_dir;
  if (dir) {
    try {
      rmw::cli::write_artifacts(o, *dir);
    } catch (const std::exception& e) {
      std::cerr << "rmw: " << e.what() << "\n";
      return rmw::cli::kInputError;
    }
  }
  if (o.exit_code == rmw::cli::kInputError && o.report.contains("message"))
    std::cerr << "rmw: " << o.report["message"].get<std::string>() << "\n";
  return o.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rmw - rigid-object mutation workbench for type-A triangulated orbit categories"};
  app.require_subcommand(1);
  // Global options are accepted before or after the subcommand.
  app.fallthrough();
  std::string format = "json", out_flag;
  uint64_t seed = 0;
  app.add_option("--format", format, "Report format on stdout")->check(CLI::IsMember({"json", "md"}));
  app.add_option("--out", out_flag, "Output directory for artifacts (default: $RMW_OUTPUT_DIR)");
  app.add_option("--seed", seed, "Seed for the scan order of property suites (never changes results)");

  std::string preset_name, T, R, theorem = "all", figure, suite = "perps", scenario;
  bool cbart = false;

  auto* preset = app.add_subcommand("preset", "Preset catalog");
  preset->require_subcommand(1);
  preset->fallthrough();
  auto* preset_list = preset->add_subcommand("list", "List the shipped presets");
  auto* preset_validate = preset->add_subcommand("validate", "Validate presets against their realising algebras");
  std::vector<std::string> validate_names;
  preset_validate->add_option("--preset", validate_names, "Preset(s) to validate (default: all)");

  auto* mutate = app.add_subcommand("mutate", "Mutate a basic rigid object T at a summand R");
  mutate->add_option("--preset", preset_name, "Preset name")->required();
  mutate->add_option("--T", T, "Summands of T (labels or (p,i), comma-separated)")->required();
  mutate->add_option("--R", R, "Summands of R")->required();

  auto* subcat = app.add_subcommand("subcat", "Compute C(T) or Cbar(T)");
  subcat->add_option("--preset", preset_name, "Preset name")->required();
  subcat->add_option("--T", T, "Summands of T")->required();
  subcat->add_option("--R", R, "Summands of R (needed for --cbart)");
  subcat->add_flag("--cbart", cbart, "Compute Cbar(T) = T * Sigma Tbar instead of C(T)");

  auto* verify = app.add_subcommand("verify", "Verify the equivalence and localisation theorems for (T, R)");
  verify->add_option("--preset", preset_name, "Preset name")->required();
  verify->add_option("--T", T, "Summands of T")->required();
  verify->add_option("--R", R, "Summands of R")->required();
  verify->add_option("--theorem", theorem, "Which theorem")
      ->check(CLI::IsMember({"main", "fbar", "localisations", "all"}));

  auto* reproduce = app.add_subcommand("reproduce", "Reproduce a worked example");
  reproduce->add_option("--figure", figure, "Figure id (1..5, intro_A3, intro_A4)")->required();

  auto* enumerate = app.add_subcommand("enumerate-rigid", "Enumerate basic rigid objects");
  enumerate->add_option("--preset", preset_name, "Preset name")->required();

  auto* suite_cmd = app.add_subcommand("suite", "Run a property suite over all (sampled) mutations");
  suite_cmd->add_option("--preset", preset_name, "Preset name")->required();
  suite_cmd->add_option("--suite", suite, "Which suite")->check(CLI::IsMember({"perps", "main", "serre"}));

  auto* run = app.add_subcommand("run", "Run a JSON scenario file");
  run->add_option("scenario", scenario, "Scenario file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : rmw::cli::kInputError;
  }

  using namespace rmw::cli;
  auto with_preset = [&](auto&& body) {
    return guarded([&] {
      const auto P = rmw::load_preset(preset_name);
      return body(*P);
    });
  };

  Outcome o;
  if (preset_list->parsed())
    o = guarded([] { return rmw::cli::preset_list(); });
  else if (preset_validate->parsed())
    o = guarded([&] { return rmw::cli::preset_validate(validate_names); });
  else if (mutate->parsed())
    o = with_preset([&](const rmw::Preset& P) { return mutate_cmd(P, T, R); });
  else if (subcat->parsed())
    o = with_preset([&](const rmw::Preset& P) { return subcat_cmd(P, T, R, cbart); });
  else if (verify->parsed())
    o = with_preset([&](const rmw::Preset& P) { return verify_cmd(P, T, R, theorem); });
  else if (reproduce->parsed())
    o = guarded([&] { return reproduce_cmd(figure); });
  else if (enumerate->parsed())
    o = with_preset([&](const rmw::Preset& P) { return enumerate_rigid_cmd(P); });
  else if (suite_cmd->parsed())
    o = with_preset([&](const rmw::Preset& P) { return rmw::cli::suite_cmd(P, suite, seed); });
  else if (run->parsed())
    o = run_scenario_file(scenario, seed);
  return emit(o, format, out_flag);
}
