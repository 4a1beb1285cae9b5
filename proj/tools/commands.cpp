#include "commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "rmw/errors.hpp"
#include "rmw/figures.hpp"
#include "rmw/modcat.hpp"
#include "rmw/rigid.hpp"
#include "rmw/subcat.hpp"
#include "rmw/suites.hpp"

namespace rmw::cli {

namespace fs = std::filesystem;

namespace {

Json label_list(const Preset& P, const std::vector<int>& xs) {
  Json a = Json::array();
  for (int x : xs) a.push_back(P.label(x));
  return a;
}

Json string_list(const std::vector<std::string>& xs) {
  Json a = Json::array();
  for (const auto& s : xs) a.push_back(s);
  return a;
}

Json spec_json(const OrbitSpec& s) {
  Json j;
  j["n"] = s.n;
  j["a"] = s.a;
  j["b"] = s.b;
  return j;
}

std::string slug(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (std::isalnum(static_cast<unsigned char>(c)))
      out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    else if (!out.empty() && out.back() != '_')
      out += '_';
  }
  while (!out.empty() && out.back() == '_') out.pop_back();
  return out.empty() ? "x" : out;
}

Json triangle_json(const Preset& P, const Triangle& t) {
  Json j;
  j["X"] = label_list(P, t.X);
  j["Y"] = label_list(P, t.Y);
  j["Z"] = label_list(P, t.Z);
  return j;
}

Json validation_json(const PresetValidation& v) {
  Json j;
  j["pass"] = v.pass;
  j["mismatch"] = v.mismatch;
  j["orbit_objects"] = v.orbit_objects;
  j["stable_objects"] = v.stable_objects;
  Json steps = Json::array();
  for (const auto& s : v.steps) {
    Json st;
    st["name"] = s.name;
    st["pass"] = s.pass;
    st["detail"] = s.detail;
    steps.push_back(st);
  }
  j["steps"] = steps;
  Json tl = Json::object();
  for (const auto& [label, module] : v.transported_labels) tl[label] = module;
  j["transported_labels"] = tl;
  return j;
}

Json picture_json(const QuiverPicture& q) {
  Json j;
  j["name"] = q.name;
  j["vertices"] = string_list(q.labels);
  int arrows = 0;
  Json list = Json::array();
  for (size_t s = 0; s < q.arrows.size(); ++s)
    for (size_t t = 0; t < q.arrows[s].size(); ++t)
      for (int k = 0; k < q.arrows[s][t]; ++k) {
        ++arrows;
        list.push_back(Json::array({q.labels[s], q.labels[t]}));
      }
  j["arrow_count"] = arrows;
  j["arrows"] = list;
  if (!q.marked.empty()) {
    Json m = Json::array();
    for (size_t k = 0; k < q.marked.size(); ++k)
      if (q.marked[k]) m.push_back(q.labels[k]);
    j["encircled"] = m;
  }
  return j;
}

Json checks_json(const std::vector<Check>& checks) {
  Json a = Json::array();
  for (const auto& c : checks) {
    Json j;
    j["name"] = c.name;
    j["pass"] = c.pass;
    j["detail"] = c.detail;
    a.push_back(j);
  }
  return a;
}

void add_markdown(Outcome& o, const std::string& stem) {
  o.stem = stem;
  o.artifacts.push_back({stem + ".md", to_markdown(o.report)});
}

Json main_report_json(const Preset& P, const MainReport& r) {
  Json j;
  j["pass"] = r.pass;
  j["failures"] = string_list(r.failures);
  j["T'"] = label_list(P, r.mut.Tprime);
  j["Cbar(T)"] = label_list(P, r.cbar);
  j["Cbar(T)/(Sigma T')"] = label_list(P, r.P1.objects);
  j["tau Cbar(T)/(tau T)"] = label_list(P, r.P2.objects);
  Json map = Json::object();
  for (size_t k = 0; k < r.object_map.size(); ++k)
    if (r.object_map[k] >= 0) map[P.label(r.P1.objects[k])] = P.label(r.P2.objects[static_cast<size_t>(r.object_map[k])]);
  j["object_map"] = map;
  j["morphisms_checked"] = r.morphisms_checked;
  j["ideals_agree"] = r.ideals_agree;
  j["lifts_unique"] = r.lifts_unique;
  j["functorial"] = r.functorial;
  j["hom_bijective"] = r.hom_bijective;
  j["unit_iso"] = r.unit_iso;
  j["counit_iso"] = r.counit_iso;
  j["quiver_certificate"] = r.quiver_certificate.has_value();
  return j;
}

Json fbar_side_json(const Preset& P, const FbarReport& r) {
  Json j;
  j["pass"] = r.pass;
  j["failures"] = string_list(r.failures);
  j["E"] = label_list(P, r.E);
  j["E_by_definition"] = label_list(P, r.E_def);
  j["Q"] = label_list(P, r.Q);
  j["B"] = label_list(P, r.B);
  j["E/add Q"] = label_list(P, r.quotient_objects);
  j["Cbar(T)/(Sigma T')"] = label_list(P, r.cbar_quotient.objects);
  return j;
}

Json localisation_json(const LocalisationReport& r) {
  Json j;
  j["pass"] = r.pass;
  j["failures"] = string_list(r.failures);
  j["morphisms_tested"] = r.morphisms_tested;
  j["in_S"] = r.s_count;
  j["in_S_tilde"] = r.stilde_count;
  j["in_S_B0"] = r.sb0_count;
  j["in_S_tilde_not_S"] = r.stilde_not_s;
  j["inverses_constructed"] = r.inverse_constructed;
  j["cocones_in_C(T)"] = r.z_in_cT_triangles;
  j["B_iff_XT_checked"] = r.b_iff_xt_checked;
  j["S_B0_lifted"] = r.sb0_lifted;
  return j;
}

std::pair<int, int> line_col(const std::string& text, size_t byte) {
  int line = 1, col = 1;
  for (size_t k = 0; k < byte && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

// Position of the first occurrence of a JSON string literal (or, failing
// that, of `fallback`) in the scenario text.
std::string position_of(const std::string& text, const std::string& value, const std::string& fallback = "") {
  size_t at = text.find(Json(value).dump());
  if (at == std::string::npos && !fallback.empty()) at = text.find(Json(fallback).dump());
  if (at == std::string::npos) return "";
  const auto [l, c] = line_col(text, at);
  return "line " + std::to_string(l) + ", column " + std::to_string(c) + ": ";
}

[[noreturn]] void rethrow_at(const InputError& e, const std::string& where) {
  const std::string prefix = e.code() + ": ";
  std::string msg = e.what();
  if (msg.rfind(prefix, 0) == 0) msg = msg.substr(prefix.size());
  throw InputError(e.code(), where + msg);
}

[[noreturn]] void parse_error(const std::string& text, const std::string& value, const std::string& what) {
  throw InputError("ParseError", position_of(text, value) + what);
}

const Json& require(const std::string& text, const Json& obj, const std::string& key, const std::string& ctx) {
  if (!obj.contains(key)) parse_error(text, ctx, "missing field \"" + key + "\" in " + ctx);
  return obj.at(key);
}

std::string require_string(const std::string& text, const Json& obj, const std::string& key, const std::string& ctx) {
  const Json& v = require(text, obj, key, ctx);
  if (!v.is_string()) parse_error(text, key, "field \"" + key + "\" in " + ctx + " must be a string");
  return v.get<std::string>();
}

std::vector<std::string> split_top(const std::string& csv) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : csv) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

Outcome error_outcome(const std::exception& e) {
  Outcome o;
  if (const auto* err = dynamic_cast<const Error*>(&e)) {
    o.exit_code = err->input_error() ? kInputError : kVerificationFailure;
    o.report["error"] = err->code();
  } else {
    o.exit_code = kVerificationFailure;
    o.report["error"] = "InternalError";
  }
  o.report["message"] = e.what();
  if (o.exit_code == kVerificationFailure) o.report["witness"] = e.what();
  return o;
}

Outcome preset_list() {
  Outcome o;
  o.report["command"] = "preset list";
  Json list = Json::array();
  for (const auto& name : preset_names()) {
    const PresetInfo info = load_preset_info(name);
    Json j;
    j["name"] = info.name;
    j["title"] = info.title;
    j["spec"] = spec_json(info.spec);
    j["labels"] = static_cast<int>(info.labels.size());
    j["realising_algebra"] = info.algebra_file ? Json(fs::path(*info.algebra_file).filename().string()) : Json(nullptr);
    j["realisation_note"] = info.realisation_note;
    list.push_back(j);
  }
  o.report["presets"] = list;
  add_markdown(o, "preset_list");
  return o;
}

Outcome preset_validate(const std::vector<std::string>& names_in) {
  Outcome o;
  o.report["command"] = "preset validate";
  const std::vector<std::string> names = names_in.empty() ? preset_names() : names_in;
  Json list = Json::array();
  bool all = true;
  for (const auto& name : names) {
    const PresetInfo info = load_preset_info(name);
    const PresetValidation v = validate_preset(info);
    Json j;
    j["name"] = name;
    j["spec"] = spec_json(info.spec);
    j.update(validation_json(v));
    if (all && !v.pass) o.report["witness"] = name + ": " + v.mismatch;
    all = all && v.pass;
    list.push_back(j);
  }
  o.report["pass"] = all;
  o.report["presets"] = list;
  o.exit_code = all ? kPass : kVerificationFailure;
  add_markdown(o, "preset_validate");
  return o;
}

Outcome mutate_cmd(const Preset& P, const std::string& Ts, const std::string& Rs) {
  const FinCat& C = P.cat();
  const Obj T = P.resolve_list(Ts), R = P.resolve_list(Rs);
  const Mutation m = mutate(C, T, R);
  Outcome o;
  o.report["command"] = "mutate";
  o.report["preset"] = P.name();
  o.report["T"] = label_list(P, m.T);
  o.report["R"] = label_list(P, m.R);
  o.report["Tbar"] = label_list(P, m.Tbar);
  o.report["B"] = label_list(P, m.B);
  o.report["R*"] = label_list(P, m.Rstar);
  o.report["T'"] = label_list(P, m.Tprime);
  o.report["exchange_triangle"] = triangle_json(P, m.exchange);
  const std::string exact = check_exact(C, m.exchange);
  o.report["exchange_triangle_exact"] = exact.empty();
  o.report["T'_rigid"] = is_rigid(C, m.Tprime);
  o.report["T_cluster_tilting"] = is_cluster_tilting(C, m.T);
  o.report["T'_cluster_tilting"] = is_cluster_tilting(C, m.Tprime);
  if (!exact.empty()) {
    o.report["witness"] = exact;
    o.exit_code = kVerificationFailure;
  }
  o.artifacts.push_back({"mutate_T.dot", ar_picture(P, "T", make_sub(m.T)).dot()});
  o.artifacts.push_back({"mutate_Tprime.dot", ar_picture(P, "T'", make_sub(m.Tprime)).dot()});
  add_markdown(o, "mutate");
  return o;
}

Outcome subcat_cmd(const Preset& P, const std::string& Ts, const std::string& Rs, bool cbart) {
  const FinCat& C = P.cat();
  const Obj T = P.resolve_list(Ts);
  Outcome o;
  o.report["command"] = "subcat";
  o.report["preset"] = P.name();
  o.report["T"] = label_list(P, T);
  if (!cbart) {
    const Sub cT = cat_T(C, T);
    o.report["subcategory"] = "C(T) = T * Sigma T";
    o.report["objects"] = label_list(P, cT);
    o.artifacts.push_back({"subcat_CT.dot", ar_picture(P, "C(T)", cT).dot()});
    add_markdown(o, "subcat");
    return o;
  }
  if (Rs.empty()) throw InputError("UsageError", "Cbar(T) = T * Sigma Tbar needs the summand R (--R)");
  const Obj R = P.resolve_list(Rs);
  const Mutation m = mutate(C, T, R);
  const Sub cbar = cbar_T(C, T, m.Tbar);
  const Sub alt = cbar_T_alt(C, m.Tbar, m.Tprime);
  const Sub nonmembers = sub_difference(all_objects(C), cbar);
  o.report["subcategory"] = "Cbar(T) = T * Sigma Tbar";
  o.report["R"] = label_list(P, R);
  o.report["T'"] = label_list(P, m.Tprime);
  o.report["objects"] = label_list(P, cbar);
  o.report["count"] = static_cast<int>(cbar.size());
  o.report["non_members"] = label_list(P, nonmembers);
  o.report["equals_Tbar_star_Sigma_T'"] = cbar == alt;
  if (cbar != alt) {
    o.report["witness"] = "Tbar * Sigma T' = " + P.obj_label(alt);
    o.exit_code = kVerificationFailure;
  }
  o.artifacts.push_back({"subcat_cbar.dot", ar_picture(P, "Cbar(T)", cbar).dot()});
  const Quotient full = full_subcategory(C, cbar);
  QuiverPicture q = quotient_picture(P, "Cbar(T) quiver", full);
  o.artifacts.push_back({"subcat_cbar_quiver.dot", q.dot()});
  add_markdown(o, "subcat");
  return o;
}

Outcome verify_cmd(const Preset& P, const std::string& Ts, const std::string& Rs, const std::string& theorem) {
  static const std::vector<std::string> kTheorems{"main", "fbar", "localisations", "all"};
  if (std::find(kTheorems.begin(), kTheorems.end(), theorem) == kTheorems.end())
    throw InputError("UsageError", "unknown theorem '" + theorem + "' (main, fbar, localisations, all)");
  const FinCat& C = P.cat();
  const Obj T = P.resolve_list(Ts), R = P.resolve_list(Rs);
  Outcome o;
  o.report["command"] = "verify";
  o.report["preset"] = P.name();
  o.report["T"] = label_list(P, T);
  o.report["R"] = label_list(P, R);
  bool pass = true;
  Json results = Json::object();
  if (theorem == "main" || theorem == "all") {
    const MainReport r = verify_main_equivalence(C, T, R);
    results["main"] = main_report_json(P, r);
    pass = pass && r.pass;
    o.artifacts.push_back({"verify_main_P1.dot", quotient_picture(P, "Cbar(T)/(Sigma T')", r.P1).dot()});
    o.artifacts.push_back({"verify_main_P2.dot", quotient_picture(P, "tau Cbar(T)/(tau T)", r.P2).dot()});
  }
  if (theorem == "fbar" || theorem == "all") {
    const TheoremFbarReport r = verify_theorem_fbar(C, T, R);
    Json j;
    j["pass"] = r.pass;
    j["failures"] = string_list(r.failures);
    j["primal"] = fbar_side_json(P, r.primal);
    j["dual"] = fbar_side_json(P, r.dual);
    j["quiver_certificate"] = r.certificate.has_value();
    results["fbar"] = j;
    pass = pass && r.pass;
  }
  if (theorem == "localisations" || theorem == "all") {
    const LocalisationReport r = verify_more_localisations(C, T, R);
    results["localisations"] = localisation_json(r);
    pass = pass && r.pass;
  }
  o.report["pass"] = pass;
  if (!pass) {
    for (const auto& [name, r] : results.items())
      if (!r["pass"].get<bool>()) {
        o.report["witness"] =
            name + ": " + (r["failures"].empty() ? std::string("failed") : r["failures"][0].get<std::string>());
        break;
      }
  }
  o.report["results"] = results;
  o.exit_code = pass ? kPass : kVerificationFailure;
  add_markdown(o, "verify");
  return o;
}

Outcome reproduce_cmd(const std::string& figure) {
  const FigureSpec spec = figure_spec(figure);
  const FigureResult r = reproduce_figure(spec);
  Outcome o;
  const std::string stem = "figure_" + slug(spec.id);
  o.report["command"] = "reproduce";
  o.report["figure"] = r.id;
  o.report["title"] = r.title;
  o.report["preset"] = r.preset;
  o.report["T"] = r.T;
  o.report["R"] = r.R;
  o.report["pass"] = r.pass();
  for (const auto& c : r.checks)
    if (!c.pass) {
      o.report["witness"] = c.name + ": " + c.detail;
      break;
    }
  o.report["checks"] = checks_json(r.checks);
  Json sets = Json::object();
  for (const auto& [name, labels] : r.sets) sets[name] = string_list(labels);
  o.report["sets"] = sets;
  Json quivers = Json::array();
  for (size_t k = 0; k < r.quivers.size(); ++k) {
    quivers.push_back(picture_json(r.quivers[k]));
    o.artifacts.push_back({stem + "_" + std::to_string(k + 1) + "_" + slug(r.quivers[k].name) + ".dot", r.quivers[k].dot()});
  }
  o.report["quivers"] = quivers;
  Json certs = Json::array();
  for (const auto& c : r.certificates) {
    Json j;
    j["name"] = c.name;
    j["from"] = c.from;
    j["to"] = c.to;
    Json map = Json::object();
    for (const auto& [a, b] : c.map) map[a] = b;
    j["map"] = map;
    certs.push_back(j);
  }
  o.report["certificates"] = certs;
  o.exit_code = r.pass() ? kPass : kVerificationFailure;
  add_markdown(o, stem);
  return o;
}

Outcome enumerate_rigid_cmd(const Preset& P) {
  const FinCat& C = P.cat();
  const std::vector<Obj> all = enumerate_basic_rigid(C);
  Outcome o;
  o.report["command"] = "enumerate-rigid";
  o.report["preset"] = P.name();
  o.report["indecomposables"] = C.size();
  o.report["basic_rigid_including_zero"] = static_cast<int>(all.size());
  std::map<size_t, int> by_size;
  Json ct = Json::array();
  Json list = Json::array();
  for (const Obj& X : all) {
    ++by_size[X.size()];
    if (X.empty()) continue;
    list.push_back(P.obj_label(X));
    if (is_cluster_tilting(C, X)) ct.push_back(P.obj_label(X));
  }
  Json sizes = Json::object();
  for (const auto& [k, n] : by_size) sizes[std::to_string(k)] = n;
  o.report["by_number_of_summands"] = sizes;
  o.report["cluster_tilting_count"] = static_cast<int>(ct.size());
  o.report["cluster_tilting"] = ct;
  o.report["rigid"] = list;
  add_markdown(o, "enumerate_rigid");
  return o;
}

Outcome suite_cmd(const Preset& P, const std::string& which, uint64_t seed) {
  const FinCat& C = P.cat();
  Outcome o;
  o.report["command"] = "suite";
  o.report["preset"] = P.name();
  o.report["suite"] = which;
  if (which == "serre") {
    const std::vector<Check> checks{serre_duality_symmetry(C), serre_equals_tau_sigma(C)};
    const bool pass = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
    o.report["pass"] = pass;
    for (const auto& c : checks)
      if (!c.pass) {
        o.report["witness"] = c.name + ": " + c.detail;
        break;
      }
    o.report["checks"] = checks_json(checks);
    o.exit_code = pass ? kPass : kVerificationFailure;
    add_markdown(o, "suite");
    return o;
  }
  if (which != "perps" && which != "main")
    throw InputError("UsageError", "unknown suite '" + which + "' (perps, main, serre)");
  const std::vector<Split> splits = all_splits(enumerate_basic_rigid(C));
  const std::vector<Split> sample = sample_splits(splits, 1000);
  const std::vector<Split> order = scan_order(sample, seed);
  const SuiteReport r = which == "perps" ? perp_suite(C, order) : main_equivalence_suite(C, order);
  o.report["pass"] = r.pass;
  o.report["splits_total"] = static_cast<int>(splits.size());
  o.report["splits_sampled"] = static_cast<int>(sample.size());
  o.report["tested"] = r.tested;
  o.report["outside_hypotheses"] = r.outside_hypotheses;
  o.report["failed"] = r.failed;
  Json f = Json::array();
  for (size_t k = 0; k < r.failures.size() && k < 10; ++k) f.push_back(r.failures[k]);
  o.report["failures"] = f;
  if (!r.pass) o.report["witness"] = r.failures.empty() ? std::string("no split satisfied the hypotheses") : r.failures[0];
  o.exit_code = r.pass ? kPass : kVerificationFailure;
  add_markdown(o, "suite");
  return o;
}

// ---------------------------------------------------------------------------
// Scenarios

namespace {

struct ScenarioCategory {
  std::shared_ptr<const Preset> preset;
  std::map<std::string, std::string> names;  // named object -> token

  std::string expand(const std::string& csv) const {
    std::string out;
    for (const auto& tok : split_top(csv)) {
      if (!out.empty()) out += ',';
      const auto it = names.find(tok);
      out += it == names.end() ? tok : it->second;
    }
    return out;
  }
};

const std::vector<std::string> kScenarioKeys{"description", "category", "objects", "commands", "output"};
const std::vector<std::string> kCommands{"validate", "mutate", "subcat", "verify", "reproduce", "enumerate-rigid", "suite"};

Outcome run_command(const std::string& text, const Json& cmd, const std::string& name, const ScenarioCategory* cat,
                    uint64_t seed) {
  const std::string ctx = "command \"" + name + "\"";
  auto need_cat = [&]() -> const Preset& {
    if (!cat) parse_error(text, name, ctx + " needs a \"category\"");
    return *cat->preset;
  };
  auto field = [&](const std::string& key) { return require_string(text, cmd, key, ctx); };
  auto opt_field = [&](const std::string& key) {
    if (!cmd.contains(key)) return std::string();
    if (!cmd.at(key).is_string()) parse_error(text, key, "field \"" + key + "\" in " + ctx + " must be a string");
    return cmd.at(key).get<std::string>();
  };
  // Label errors are reported at the position of the offending field.
  auto labels = [&](const std::string& key, bool optional = false) {
    const std::string raw = optional ? opt_field(key) : field(key);
    const std::string expanded = cat ? cat->expand(raw) : raw;
    try {
      if (cat && !expanded.empty()) cat->preset->resolve_list(expanded);
    } catch (const InputError& e) {
      rethrow_at(e, position_of(text, raw));
    }
    return expanded;
  };
  if (name == "validate") {
    const Preset& P = need_cat();
    if (P.name() == "scenario") {
      Outcome o;
      o.report["command"] = "validate";
      o.report["note"] = "the category was validated when the scenario was loaded";
      o.report["pass"] = true;
      return o;
    }
    return preset_validate({P.name()});
  }
  if (name == "mutate") {
    const Preset& P = need_cat();
    return mutate_cmd(P, labels("T"), labels("R"));
  }
  if (name == "subcat") {
    const Preset& P = need_cat();
    bool cbart = false;
    if (cmd.contains("cbart")) {
      if (!cmd.at("cbart").is_boolean()) parse_error(text, "cbart", "field \"cbart\" must be a boolean");
      cbart = cmd.at("cbart").get<bool>();
    }
    return subcat_cmd(P, labels("T"), labels("R", true), cbart);
  }
  if (name == "verify") {
    const Preset& P = need_cat();
    const std::string theorem = cmd.contains("theorem") ? field("theorem") : "all";
    return verify_cmd(P, labels("T"), labels("R"), theorem);
  }
  if (name == "reproduce") {
    const std::string fig = field("figure");
    try {
      return reproduce_cmd(fig);
    } catch (const InputError& e) {
      if (e.code() == "UnknownFigure") rethrow_at(e, position_of(text, fig));
      throw;
    }
  }
  if (name == "enumerate-rigid") return enumerate_rigid_cmd(need_cat());
  if (name == "suite") return suite_cmd(need_cat(), cmd.contains("suite") ? field("suite") : "perps", seed);
  parse_error(text, name, "unknown command \"" + name + "\"");
}

Outcome run_scenario_impl(const std::string& text, const std::string& base_dir, uint64_t seed) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const auto [l, c] = line_col(text, e.byte > 0 ? e.byte - 1 : 0);
    throw InputError("ParseError", "line " + std::to_string(l) + ", column " + std::to_string(c) + ": " + e.what());
  }
  if (!doc.is_object()) throw InputError("ParseError", "line 1, column 1: a scenario must be a JSON object");
  for (const auto& [key, value] : doc.items())
    if (std::find(kScenarioKeys.begin(), kScenarioKeys.end(), key) == kScenarioKeys.end())
      parse_error(text, key, "unknown field \"" + key + "\"");

  Outcome o;
  o.stem = "scenario";
  o.report["command"] = "run";
  if (doc.contains("description")) o.report["description"] = doc.at("description");
  if (doc.contains("output")) {
    if (!doc.at("output").is_string()) parse_error(text, "output", "field \"output\" must be a string");
    fs::path out = doc.at("output").get<std::string>();
    if (out.is_relative()) out = fs::path(base_dir) / out;
    o.out_dir = out.lexically_normal().string();
  }

  std::optional<ScenarioCategory> cat;
  if (doc.contains("category")) {
    const Json& c = doc.at("category");
    if (!c.is_object()) parse_error(text, "category", "field \"category\" must be an object");
    std::map<std::string, std::string> names;
    if (doc.contains("objects")) {
      if (!doc.at("objects").is_object()) parse_error(text, "objects", "field \"objects\" must be an object");
      for (const auto& [name, tok] : doc.at("objects").items()) {
        if (!tok.is_string()) parse_error(text, name, "object \"" + name + "\" must name a label or \"(p,i)\"");
        names[name] = tok.get<std::string>();
      }
    }
    ScenarioCategory sc;
    sc.names = names;
    if (c.contains("preset")) {
      const std::string pname = require_string(text, c, "preset", "category");
      try {
        sc.preset = load_preset(pname);
      } catch (const InputError& e) {
        rethrow_at(e, position_of(text, pname));
      }
      o.report["category"] = Json{{"preset", pname}};
    } else if (c.contains("algebra")) {
      const std::string afile = require_string(text, c, "algebra", "category");
      const Json& sj = require(text, c, "spec", "category");
      OrbitSpec spec;
      try {
        spec.n = sj.at("n").get<int>();
        spec.a = sj.at("a").get<int>();
        spec.b = sj.at("b").get<int>();
      } catch (const nlohmann::json::exception&) {
        parse_error(text, "spec", "\"spec\" must be {\"n\": int, \"a\": int, \"b\": int}");
      }
      if (spec.n < 1) parse_error(text, "spec", "\"spec\" needs n >= 1");
      fs::path apath = afile;
      if (apath.is_relative()) apath = fs::path(base_dir) / apath;
      AlgebraPtr A;
      try {
        A = load_algebra(apath.string());
      } catch (const InputError& e) {
        rethrow_at(e, position_of(text, afile));
      }
      // Named objects are cover coordinates; they become the labels.
      const Preset base(PresetInfo{"scenario", "", spec, {}, std::nullopt, ""});
      std::vector<std::pair<std::string, CoverVertex>> labels;
      for (const auto& [name, tok] : names) {
        try {
          labels.emplace_back(name, base.orbit().rep(base.resolve(tok)));
        } catch (const InputError& e) {
          rethrow_at(e, position_of(text, tok));
        }
      }
      const PresetValidation v = validate_preset(A, spec, labels);
      o.report["category"] = Json{{"algebra", afile}, {"spec", spec_json(spec)}};
      o.report["validation"] = validation_json(v);
      if (!v.pass) {
        o.report["pass"] = false;
        o.report["witness"] = v.mismatch;
        o.exit_code = kVerificationFailure;
        return o;
      }
      sc.preset = std::make_shared<const Preset>(PresetInfo{"scenario", "", spec, labels, apath.string(), ""});
      sc.names.clear();
    } else {
      parse_error(text, "category", "\"category\" needs \"preset\" or \"algebra\"");
    }
    for (const auto& [name, tok] : sc.names) {
      try {
        sc.preset->resolve(tok);
      } catch (const InputError& e) {
        rethrow_at(e, position_of(text, tok));
      }
    }
    cat = sc;
  } else if (doc.contains("objects")) {
    parse_error(text, "objects", "\"objects\" needs a \"category\"");
  }

  Json results = Json::array();
  int exit_code = o.exit_code;
  if (doc.contains("commands")) {
    const Json& cmds = doc.at("commands");
    if (!cmds.is_array()) parse_error(text, "commands", "field \"commands\" must be an array");
    int index = 0;
    for (const Json& cmd : cmds) {
      ++index;
      if (!cmd.is_object()) parse_error(text, "commands", "command " + std::to_string(index) + " must be an object");
      const std::string name = require_string(text, cmd, "command", "command " + std::to_string(index));
      if (std::find(kCommands.begin(), kCommands.end(), name) == kCommands.end())
        parse_error(text, name, "unknown command \"" + name + "\"");
      Outcome r;
      try {
        r = run_command(text, cmd, name, cat ? &*cat : nullptr, seed);
      } catch (const InputError&) {
        throw;
      } catch (const std::exception& e) {
        r = error_outcome(e);
      }
      char prefix[16];
      std::snprintf(prefix, sizeof prefix, "%02d_", index);
      for (auto& a : r.artifacts) o.artifacts.push_back({prefix + a.name, a.content});
      Json entry;
      entry["index"] = index;
      entry["command"] = name;
      entry["exit_code"] = r.exit_code;
      entry["report"] = r.report;
      results.push_back(entry);
      if (r.exit_code != kPass && !o.report.contains("witness") && r.report.contains("witness"))
        o.report["witness"] = "command " + std::to_string(index) + " (" + name + "): " + r.report["witness"].get<std::string>();
      exit_code = std::max(exit_code, r.exit_code);
    }
  }
  o.write_report = !results.empty();
  o.report["results"] = results;
  o.report["pass"] = exit_code == kPass;
  o.exit_code = exit_code;
  return o;
}

}  // namespace

Outcome run_scenario_text(const std::string& text, const std::string& base_dir, uint64_t seed) {
  return guarded([&] { return run_scenario_impl(text, base_dir, seed); });
}

Outcome run_scenario_file(const std::string& path, uint64_t seed) {
  std::ifstream in(path);
  if (!in) return error_outcome(InputError("ParseError", "cannot read scenario file " + path));
  std::stringstream ss;
  ss << in.rdbuf();
  const fs::path p(path);
  return run_scenario_text(ss.str(), p.has_parent_path() ? p.parent_path().string() : ".", seed);
}

// ---------------------------------------------------------------------------
// Output

namespace {

std::string md_scalar(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  return v.dump();
}

bool all_scalars(const Json& a) {
  return std::all_of(a.begin(), a.end(), [](const Json& v) { return v.is_primitive(); });
}

void md_value(std::ostringstream& os, const std::string& key, const Json& v, int depth) {
  const std::string indent(static_cast<size_t>(2 * depth), ' ');
  if (v.is_primitive()) {
    os << indent << "- **" << key << "**: " << md_scalar(v) << "\n";
  } else if (v.is_array() && all_scalars(v)) {
    os << indent << "- **" << key << "**: ";
    if (v.empty()) os << "(none)";
    for (size_t k = 0; k < v.size(); ++k) os << (k ? ", " : "") << md_scalar(v[k]);
    os << "\n";
  } else if (v.is_array()) {
    os << indent << "- **" << key << "**:\n";
    int k = 0;
    for (const Json& e : v) {
      ++k;
      std::string sub = std::to_string(k);
      if (e.is_object() && e.contains("name")) sub = md_scalar(e.at("name"));
      else if (e.is_object() && e.contains("command")) sub = std::to_string(k) + ". " + md_scalar(e.at("command"));
      md_value(os, sub, e, depth + 1);
    }
  } else {
    os << indent << "- **" << key << "**:\n";
    for (const auto& [k, e] : v.items()) md_value(os, k, e, depth + 1);
  }
}

}  // namespace

std::string to_markdown(const Json& report) {
  std::ostringstream os;
  os << "# rmw " << (report.contains("command") ? md_scalar(report.at("command")) : std::string("report")) << "\n\n";
  for (const auto& [k, v] : report.items()) {
    if (k == "command") continue;
    md_value(os, k, v, 0);
  }
  return os.str();
}

std::optional<std::string> output_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("RMW_OUTPUT_DIR"); env && *env) return std::string(env);
  return std::nullopt;
}

void write_artifacts(const Outcome& o, const std::string& dir) {
  if (!o.write_report && o.artifacts.empty()) return;
  const std::string& stem = o.stem;
  fs::create_directories(dir);
  auto write = [&](const std::string& name, const std::string& content) {
    std::ofstream out(fs::path(dir) / name, std::ios::binary);
    if (!out) throw Error("IOError", "cannot write " + (fs::path(dir) / name).string());
    out << content;
  };
  write(stem + ".json", o.report.dump(2) + "\n");
  bool has_md = false;
  for (const auto& a : o.artifacts) {
    write(a.name, a.content);
    has_md = has_md || a.name == stem + ".md";
  }
  if (!has_md) write(stem + ".md", to_markdown(o.report));
}

}  // namespace rmw::cli
