// Command implementations behind the rmw command-line tool.  Every command
// produces a deterministic JSON report (fixed key order, no timestamps), a
// Markdown summary and a list of artifacts (DOT graphs, JSON files) that the
// front end writes to the output directory.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "rmw/presets.hpp"

namespace rmw::cli {

using Json = nlohmann::ordered_json;

// Exit codes.
constexpr int kPass = 0;
constexpr int kVerificationFailure = 1;
constexpr int kInputError = 2;

struct Artifact {
  std::string name, content;
};

// On a verification failure the report carries a top-level "witness".
struct Outcome {
  int exit_code = kPass;
  Json report = Json::object();
  std::vector<Artifact> artifacts;
  std::optional<std::string> out_dir;  // requested by a scenario file
  std::string stem = "report";          // file stem of report / summary
  bool write_report = true;             // false: nothing to write (empty scenario)
};

Outcome preset_list();
Outcome preset_validate(const std::vector<std::string>& names);
Outcome mutate_cmd(const Preset& P, const std::string& T, const std::string& R);
// C(T) when R is empty and cbart is false; Cbar(T) needs R.
Outcome subcat_cmd(const Preset& P, const std::string& T, const std::string& R, bool cbart);
// theorem in {main, fbar, localisations, all}.
Outcome verify_cmd(const Preset& P, const std::string& T, const std::string& R, const std::string& theorem);
Outcome reproduce_cmd(const std::string& figure);
Outcome enumerate_rigid_cmd(const Preset& P);
// Property suites (perps or main) over the preset; the seed only permutes
// the scan order.
Outcome suite_cmd(const Preset& P, const std::string& which, uint64_t seed);

// Scenario files: {"category": {"preset": name} | {"algebra": file, "spec":
// {n,a,b}}, "objects": {name: label-or-coordinates}, "commands": [...],
// "output": dir}.  Errors carry line/column positions.
Outcome run_scenario_text(const std::string& text, const std::string& base_dir, uint64_t seed);
Outcome run_scenario_file(const std::string& path, uint64_t seed);

// Runs a command body, mapping errors to exit codes and witnesses.
template <class F>
Outcome guarded(F&& body);
Outcome error_outcome(const std::exception& e);

// Markdown rendering of a report.
std::string to_markdown(const Json& report);

// Output directory: explicit flag, else RMW_OUTPUT_DIR, else none.
std::optional<std::string> output_dir(const std::string& flag);
// Writes the report (<stem>.json, <stem>.md) and all artifacts to dir.
void write_artifacts(const Outcome& o, const std::string& dir);

template <class F>
Outcome guarded(F&& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return error_outcome(e);
  }
}

}  // namespace rmw::cli
