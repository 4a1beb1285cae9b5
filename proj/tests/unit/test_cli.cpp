#include <filesystem>
#include <fstream>

#include "commands.hpp"
#include "doctest.h"

using namespace rmw::cli;
namespace fs = std::filesystem;

namespace {

Outcome run(const std::string& text, uint64_t seed = 0) { return run_scenario_text(text, ".", seed); }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("empty scenario: exit 0, nothing to write") {
    for (const char* text : {"{}", "{\"commands\": []}"}) {
      const Outcome o = run(text);
      CHECK(o.exit_code == kPass);
      CHECK(o.artifacts.empty());
      CHECK_FALSE(o.write_report);
      const fs::path dir = fs::temp_directory_path() / "rmw_empty_scenario";
      fs::remove_all(dir);
      write_artifacts(o, dir.string());
      CHECK_FALSE(fs::exists(dir));
    }
  }

  TEST_CASE("parse errors carry a line and column") {
    const Outcome o = run("{\n  \"commands\": [\n    {\"command\": \"mutate\" \"T\": \"a\"}\n  ]\n}\n");
    CHECK(o.exit_code == kInputError);
    CHECK(o.report["error"] == "ParseError");
    CHECK(o.report["message"].get<std::string>().find("line 3") != std::string::npos);
  }

  TEST_CASE("unknown preset and unknown label carry positions") {
    const Outcome p = run("{\n  \"category\": {\"preset\": \"A7\"}\n}\n");
    CHECK(p.exit_code == kInputError);
    CHECK(p.report["error"] == "UnknownPreset");
    CHECK(p.report["message"].get<std::string>().find("line 2, column 26") != std::string::npos);
    const Outcome l = run(
        "{\n  \"category\": {\"preset\": \"A9_t3s1\"},\n  \"commands\": [\n"
        "    {\"command\": \"mutate\", \"T\": \"a,b,zz\", \"R\": \"a\"}\n  ]\n}\n");
    CHECK(l.exit_code == kInputError);
    CHECK(l.report["error"] == "UnknownLabel");
    CHECK(l.report["message"].get<std::string>().find("line 4") != std::string::npos);
  }

  TEST_CASE("commands need a category; unknown fields and commands are rejected") {
    CHECK(run("{\"commands\": [{\"command\": \"mutate\", \"T\": \"a\", \"R\": \"a\"}]}").exit_code == kInputError);
    CHECK(run("{\"bogus\": 1}").exit_code == kInputError);
    CHECK(run("{\"category\": {\"preset\": \"A3_tm1s1\"}, \"commands\": [{\"command\": \"frobnicate\"}]}").exit_code ==
          kInputError);
  }

  TEST_CASE("named objects resolve through the scenario") {
    const Outcome o = run(
        "{\"category\": {\"preset\": \"A9_t3s1\"}, \"objects\": {\"x\": \"c\", \"y\": \"(0,2)\"},"
        " \"commands\": [{\"command\": \"mutate\", \"T\": \"a,y,x\", \"R\": \"x\"}]}");
    REQUIRE(o.exit_code == kPass);
    const auto& rep = o.report["results"][0]["report"];
    CHECK(rep["T'"] == Json::array({"a", "b", "s"}));
    CHECK(rep["R*"] == Json::array({"s"}));
  }

  TEST_CASE("verification failures exit 1 with a witness") {
    const Outcome o = run(
        "{\"category\": {\"preset\": \"A5_tm2s1\"},"
        " \"commands\": [{\"command\": \"mutate\", \"T\": \"(0,1),(0,2)\", \"R\": \"(0,1)\"}]}");
    CHECK(o.exit_code == kVerificationFailure);
    CHECK(o.report["witness"].get<std::string>().find("RigidityLost") != std::string::npos);
    const Outcome v = run("{\"category\": {\"preset\": \"A9_t3s1\"}, \"commands\": [{\"command\": \"validate\"}]}");
    CHECK(v.exit_code == kVerificationFailure);
    CHECK(v.report["witness"].get<std::string>().find("realising_algebra") != std::string::npos);
  }

  TEST_CASE("scenario outputs are deterministic and independent of the seed") {
    const std::string text =
        "{\"category\": {\"preset\": \"A3_tm1s1\"}, \"commands\": ["
        "{\"command\": \"suite\", \"suite\": \"perps\"}, {\"command\": \"verify\", \"T\": \"T1,T2,T3\", \"R\": \"T2\"},"
        "{\"command\": \"reproduce\", \"figure\": \"intro_A3\"}]}";
    const Outcome a = run(text, 1), b = run(text, 1), c = run(text, 12345);
    CHECK(a.exit_code == kPass);
    CHECK(a.report.dump() == b.report.dump());
    CHECK(a.report.dump() == c.report.dump());
    REQUIRE(a.artifacts.size() == c.artifacts.size());
    for (size_t k = 0; k < a.artifacts.size(); ++k) {
      CHECK(a.artifacts[k].name == c.artifacts[k].name);
      CHECK(a.artifacts[k].content == c.artifacts[k].content);
    }
  }

  TEST_CASE("scenario with an algebra file validates the category first") {
    const fs::path dir = fs::temp_directory_path() / "rmw_algebra_scenario";
    fs::create_directories(dir);
    const fs::path alg = fs::path(RMW_TEST_PRESET_DIR) / "A3_tm1s1.algebra.json";
    const std::string text = "{\"category\": {\"algebra\": " + Json(alg.string()).dump() +
                             ", \"spec\": {\"n\": 3, \"a\": -1, \"b\": 1}},"
                             " \"objects\": {\"P\": \"(0,1)\", \"Q\": \"(0,2)\", \"R\": \"(0,3)\"},"
                             " \"commands\": [{\"command\": \"mutate\", \"T\": \"P,Q,R\", \"R\": \"Q\"}]}";
    const Outcome o = run_scenario_text(text, dir.string(), 0);
    CHECK(o.exit_code == kPass);
    CHECK(o.report["validation"]["pass"] == true);
    CHECK(o.report["results"][0]["report"]["T'"].size() == 3);
    const std::string wrong = "{\"category\": {\"algebra\": " + Json(alg.string()).dump() +
                              ", \"spec\": {\"n\": 4, \"a\": -1, \"b\": 1}}}";
    const Outcome w = run_scenario_text(wrong, dir.string(), 0);
    CHECK(w.exit_code == kVerificationFailure);
    CHECK(w.report.contains("witness"));
  }

  TEST_CASE("direct commands") {
    const auto P = rmw::load_preset("A9_t3s1");
    const Outcome s = subcat_cmd(*P, "a,b,c", "c", true);
    CHECK(s.report["count"] == 14);
    CHECK(s.report["non_members"] == Json::array({"f", "k", "p", "s"}));
    CHECK_THROWS_AS(subcat_cmd(*P, "a,b,c", "", true), rmw::InputError);
    const Outcome v = verify_cmd(*P, "a,c", "c", "all");
    CHECK(v.exit_code == kPass);
    CHECK(v.report["results"].size() == 3);
    const Outcome e = enumerate_rigid_cmd(*rmw::load_preset("A3_tm1s1"));
    CHECK(e.report["basic_rigid_including_zero"] == 45);
    CHECK(e.report["cluster_tilting_count"] == 14);
    const Outcome list = preset_list();
    CHECK(list.report["presets"].size() == 4);
    CHECK(to_markdown(list.report).find("# rmw preset list") == 0);
  }
}
