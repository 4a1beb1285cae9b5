// Acceptance run: one pass/fail line per criterion 1-10.  Every criterion
// is exact (set equality, integer counts, isomorphism certificates) and must
// finish within 60 seconds.  Usage: rmw_acceptance [criterion numbers...]
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "oracles.hpp"
#include "rmw/figures.hpp"
#include "rmw/modcat.hpp"
#include "rmw/presets.hpp"
#include "rmw/rigid.hpp"
#include "rmw/stable.hpp"
#include "rmw/subcat.hpp"
#include "rmw/suites.hpp"

using namespace rmw;

namespace {

constexpr double kTimeLimitSeconds = 60.0;
constexpr uint64_t kSeed = 2024;
constexpr int kConePairs = 100;
constexpr size_t kMinSample = 1000;

using Names = std::vector<std::string>;

struct Result {
  bool pass = true;
  std::vector<std::string> lines;  // detail lines
  void expect(bool ok, const std::string& what) {
    pass = pass && ok;
    lines.push_back(std::string(ok ? "ok    " : "FAIL  ") + what);
  }
};

Names sorted_labels(const Preset& P, const std::vector<int>& xs) {
  Names out;
  for (int x : xs) out.push_back(P.label(x));
  std::sort(out.begin(), out.end());
  return out;
}

std::string join(const Names& xs) {
  std::string s;
  for (const auto& x : xs) s += (s.empty() ? "" : ",") + x;
  return "{" + s + "}";
}

void expect_set(Result& r, const std::string& what, const Names& got, Names want) {
  std::sort(want.begin(), want.end());
  r.expect(got == want, what + " = " + join(got) + (got == want ? "" : " (expected " + join(want) + ")"));
}

const std::vector<std::string> kPresetOrder{"A9_t3s1", "A5_tm2s1", "A3_tm1s1", "A4_tm1s1"};

// The (T, R) splits exercised by the property suites: every split on
// cluster A3, a fixed-stride sample of at least kMinSample splits elsewhere.
std::vector<Split> suite_splits(const Preset& P) {
  const auto all = all_splits(enumerate_basic_rigid(P.cat()));
  if (P.name() == "A3_tm1s1") return all;
  return sample_splits(all, kMinSample);
}

// --------------------------------------------------------------------------

Result criterion1() {
  Result r;
  for (const auto& name : kPresetOrder) {
    const PresetInfo info = load_preset_info(name);
    const PresetValidation v = validate_preset(info);
    int orbit_failures = 0;
    for (const auto& s : v.steps)
      if (!s.pass && s.name != "realising_algebra") ++orbit_failures;
    r.expect(orbit_failures == 0, name + ": orbit-model checks (" + std::to_string(v.orbit_objects) + " objects)");
    r.expect(v.pass, name + ": validate_preset" + (v.pass ? "" : " -- " + v.mismatch));
  }
  const auto P = load_preset("A9_t3s1");
  r.expect(P->cat().size() == 18 && P->labels().size() == 18,
           "(9,3,1) has " + std::to_string(P->cat().size()) + " indecomposables, all labelled");
  return r;
}

Result criterion2() {
  Result r;
  const auto P = load_preset("A9_t3s1");
  const FinCat& C = P->cat();
  const Obj T = P->resolve_list("a,b,c"), R = P->resolve_list("c");
  r.expect(is_cluster_tilting(C, T), "a+b+c is cluster-tilting");
  const auto q = endo_quiver(C, T);
  r.expect(q[2][2] == 1, "loop at c in the quiver of End(T)");
  const Mutation m = mutate(C, T, R);
  expect_set(r, "T'", sorted_labels(*P, m.Tprime), {"a", "b", "s"});
  expect_set(r, "exchange triangle: first term", sorted_labels(*P, m.exchange.X), {"s"});
  expect_set(r, "exchange triangle: middle term", sorted_labels(*P, m.exchange.Y), {"b", "b"});
  expect_set(r, "exchange triangle: third term", sorted_labels(*P, m.exchange.Z), {"c"});
  r.expect(check_exact(C, m.exchange).empty(), "exchange triangle is exact");
  const Sub cbar = cbar_T(C, T, m.Tbar);
  r.expect(cbar.size() == 14, "Cbar(T) has " + std::to_string(cbar.size()) + " objects");
  expect_set(r, "non-members of Cbar(T)", sorted_labels(*P, sub_difference(all_objects(C), cbar)),
             {"f", "k", "p", "s"});
  const MainReport main = verify_main_equivalence(C, T, R);
  r.expect(main.P1.objects.size() == 11 && main.P2.objects.size() == 11,
           "quotient quivers have " + std::to_string(main.P1.objects.size()) + " and " +
               std::to_string(main.P2.objects.size()) + " vertices");
  r.expect(main.quiver_certificate.has_value(), "quiver_iso certificate between the two quotient quivers");
  return r;
}

Result criterion3() {
  Result r;
  const auto P = load_preset("A9_t3s1");
  const FinCat& C = P->cat();
  const Obj T = P->resolve_list("a,c"), R = P->resolve_list("c");
  const Mutation m = mutate(C, T, R);
  expect_set(r, "T'", sorted_labels(*P, m.Tprime), {"a", "n"});
  expect_set(r, "exchange triangle: first term", sorted_labels(*P, m.exchange.X), {"n"});
  expect_set(r, "exchange triangle: middle term", sorted_labels(*P, m.exchange.Y), {"a", "a"});
  expect_set(r, "exchange triangle: third term", sorted_labels(*P, m.exchange.Z), {"c"});
  const Sub cbar = cbar_T(C, T, m.Tbar);
  expect_set(r, "Cbar(T)", sorted_labels(*P, cbar), {"a", "c", "d", "h", "i", "q"});
  expect_set(r, "Sigma T'", sorted_labels(*P, C.sigma(m.Tprime)), {"i", "q"});
  const Quotient q1 = quotient_category(C, cbar, make_sub(C.sigma(m.Tprime)));
  const Quotient q2 = quotient_category(C, cbar, make_sub(T));
  expect_set(r, "objects of Cbar(T)/(Sigma T')", sorted_labels(*P, q1.objects), {"a", "c", "d", "h"});
  expect_set(r, "objects of Cbar(T)/(T)", sorted_labels(*P, q2.objects), {"d", "h", "i", "q"});
  const auto h1 = hom_dims(q1.P), h2 = hom_dims(q2.P);
  const auto iso = quiver_iso(quiver_of(q1.P), quiver_of(q2.P), &h1, &h2);
  r.expect(iso.has_value(), "isomorphism of the two quotients (quivers and Hom dimensions)");
  return r;
}

Result criterion4() {
  Result r;
  const auto P = load_preset("A5_tm2s1");
  const FinCat& C = P->cat();
  const Obj T = P->resolve_list("a,b,c,d"), R = P->resolve_list("c,d");
  const Mutation m = mutate(C, T, R);
  expect_set(r, "T'", sorted_labels(*P, m.Tprime), {"a", "b", "c'", "d'"});
  expect_set(r, "Sigma T'", sorted_labels(*P, C.sigma(m.Tprime)), {"e", "f", "g", "h"});
  const Sub cbar = cbar_T(C, T, m.Tbar);
  r.expect(cbar.size() == 11, "encircled set Cbar(T) has " + std::to_string(cbar.size()) + " objects");
  const auto quiver = quiver_of(full_subcategory(C, cbar).P);
  auto deletion = [&](const std::string& labels) {
    const Sub removed = make_sub(P->resolve_list(labels));
    std::vector<size_t> keep;
    for (size_t i = 0; i < cbar.size(); ++i)
      if (!sub_contains(removed, cbar[i])) keep.push_back(i);
    std::vector<std::vector<int>> q(keep.size(), std::vector<int>(keep.size(), 0));
    for (size_t i = 0; i < keep.size(); ++i)
      for (size_t j = 0; j < keep.size(); ++j) q[i][j] = quiver[keep[i]][keep[j]];
    return q;
  };
  const auto qa = deletion("a,b,c,d"), qb = deletion("e,f,g,h");
  r.expect(qa.size() == 7 && qb.size() == 7, "both deletions leave 7 vertices");
  r.expect(quiver_iso(qa, qb).has_value(), "deleting {a,b,c,d} and deleting {e,f,g,h} give isomorphic quivers");
  return r;
}

Result criterion5() {
  Result r;
  {
    const FigureResult f = reproduce_figure("intro_A3");
    const auto P = load_preset("A3_tm1s1");
    const ModModel mm = mod_model(P->cat(), P->resolve_list("T1,T2,T3"));
    r.expect(mm.model.objects.size() == 6, "cluster A3: mod Gamma model has " +
                                               std::to_string(mm.model.objects.size()) + " objects");
    if (f.quivers.size() < 4) {
      r.expect(false, "cluster A3: expected four quivers");
    } else {
      r.expect(f.quivers[2].labels.size() == 5 && f.quivers[3].labels.size() == 5,
               "cluster A3: quotients by add S2 and add S2* have " + std::to_string(f.quivers[2].labels.size()) +
                   " and " + std::to_string(f.quivers[3].labels.size()) + " objects");
      const auto h2 = f.quivers[2].hom_dims, h3 = f.quivers[3].hom_dims;
      r.expect(quiver_iso(f.quivers[2].arrows, f.quivers[3].arrows, &h2, &h3).has_value(),
               "cluster A3: the two quotients are isomorphic");
    }
  }
  {
    const FigureResult f = reproduce_figure("intro_A4");
    auto check = [&](const std::string& name) {
      for (const auto& c : f.checks)
        if (c.name == name) return c.pass;
      return false;
    };
    if (f.quivers.size() < 2) {
      r.expect(false, "cluster A4: expected the module quivers");
    } else {
      r.expect(f.quivers[0].labels.size() == 6 && f.quivers[1].labels.size() == 5,
               "cluster A4: mod Lambda has " + std::to_string(f.quivers[0].labels.size()) + " and mod Lambda' " +
                   std::to_string(f.quivers[1].labels.size()) + " indecomposables");
      r.expect(!quiver_iso(f.quivers[0].arrows, f.quivers[1].arrows).has_value(),
               "cluster A4: AR quivers of mod Lambda and mod Lambda' are not isomorphic");
    }
    r.expect(check("theorem_fbar"), "cluster A4: localisation models (mod Lambda)_R ~ (mod Lambda')_R* verified");
    r.expect(check("localisation_model_matches_cbar_quotient"),
             "cluster A4: localisation model isomorphic to Cbar(T)/(Sigma T')");
    bool certificate = false;
    for (const auto& c : f.certificates) certificate = certificate || c.name == "theorem_A_models";
    r.expect(certificate, "cluster A4: certificate between the two localisation models");
    r.expect(check("B_is_add_simple"), "cluster A4: B = add S2");
    r.expect(check("more_localisations"), "cluster A4: localisation at S_B,0 agrees with the S and S-tilde ones");
  }
  return r;
}

Result property_suite(bool perps) {
  Result r;
  for (const auto& name : {"A3_tm1s1", "A4_tm1s1", "A9_t3s1", "A5_tm2s1"}) {
    const auto P = load_preset(name);
    const auto splits = suite_splits(*P);
    const SuiteReport s = perps ? perp_suite(P->cat(), splits) : main_equivalence_suite(P->cat(), splits);
    const bool enough = std::string(name) == "A3_tm1s1" || s.tested >= 200;
    r.expect(s.pass && enough, std::string(name) + ": " + std::to_string(s.tested) + " splits tested, " +
                                   std::to_string(s.failed) + " failed, " + std::to_string(s.outside_hypotheses) +
                                   " outside the hypotheses (mutation not rigid)" +
                                   (s.failures.empty() ? "" : " -- " + s.failures.front()));
  }
  return r;
}

Result criterion6() { return property_suite(true); }
Result criterion7() { return property_suite(false); }

Result criterion8() {
  Result r;
  const std::vector<std::tuple<std::string, std::string, std::string>> configs{{"A9_t3s1", "a,c", "c"},
                                                                                {"A4_tm1s1", "T1,T2,T3", "T2"}};
  for (const auto& [name, Ts, Rs] : configs) {
    const auto P = load_preset(name);
    const Obj T = P->resolve_list(Ts), R = P->resolve_list(Rs);
    const TheoremFbarReport f = verify_theorem_fbar(P->cat(), T, R);
    r.expect(f.pass, name + " T=" + Ts + " R=" + Rs + ": verify_theorem_fbar" +
                         (f.failures.empty() ? "" : " -- " + f.failures.front()));
    const LocalisationReport l = verify_more_localisations(P->cat(), T, R);
    r.expect(l.pass, name + " T=" + Ts + " R=" + Rs + ": verify_more_localisations (" +
                         std::to_string(l.morphisms_tested) + " morphisms, " + std::to_string(l.s_count) +
                         " in S, " + std::to_string(l.stilde_count) + " in S-tilde, " +
                         std::to_string(l.inverse_constructed) + " inverses constructed, " +
                         std::to_string(l.z_in_cT_triangles) + " triangles with Z in C(T), " +
                         std::to_string(l.sb0_count) + " in S_B,0)" +
                         (l.failures.empty() ? "" : " -- " + l.failures.front()));
  }
  return r;
}

Result criterion9() {
  Result r;
  for (const auto& name : kPresetOrder) {
    const auto P = load_preset(name);
    const FinCat& C = P->cat();
    for (const Check& c : {serre_duality_symmetry(C), serre_equals_tau_sigma(C),
                           cone_representative_change(C, kConePairs, kSeed)})
      r.expect(c.pass, name + ": " + c.name + " (" + c.detail + ")");
    const PresetInfo& info = P->info();
    if (info.algebra_file) {
      const StableCategory S(load_algebra(*info.algebra_file));
      for (const Check& c : {serre_duality_symmetry(S.cat()), serre_equals_tau_sigma(S.cat()),
                             stable_cone_representative_change(S, kConePairs, kSeed)})
        r.expect(c.pass, name + " (stable module category): " + c.name + " (" + c.detail + ")");
    }
  }
  return r;
}

Result criterion10() {
  Result r;
  const auto P = load_preset("A3_tm1s1");
  const FinCat& C = P->cat();
  const auto rigid = enumerate_basic_rigid(C);
  std::map<size_t, long> by_size;
  long ct = 0;
  for (const Obj& X : rigid) {
    ++by_size[X.size()];
    ct += is_cluster_tilting(C, X);
  }
  const auto oracle = rmw_oracle::noncrossing_diagonals(6);
  r.expect(static_cast<long>(rigid.size()) == 45 && oracle.total == 45,
           "basic rigid objects (with 0): " + std::to_string(rigid.size()) + ", non-crossing diagonal sets: " +
               std::to_string(oracle.total));
  r.expect(ct == 14 && oracle.triangulations == 14, "cluster-tilting objects: " + std::to_string(ct) +
                                                        ", triangulations of the hexagon: " +
                                                        std::to_string(oracle.triangulations));
  bool sizes = true;
  std::string detail;
  for (size_t k = 0; k < oracle.by_size.size(); ++k) {
    sizes = sizes && by_size[k] == oracle.by_size[k];
    detail += (detail.empty() ? "" : " ") + std::to_string(by_size[k]) + "/" + std::to_string(oracle.by_size[k]);
  }
  r.expect(sizes, "counts by number of summands (library/oracle): " + detail);
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Result()>>> criteria{
      {"preset validation against realising algebras", criterion1},
      {"mutation of a+b+c at c in (9,3,1) and its quotient quivers", criterion2},
      {"mutation of a+c at c in (9,3,1) and its two quotients", criterion3},
      {"deletion quivers in (5,-2,1)", criterion4},
      {"module categories of cluster A3 and A4 examples", criterion5},
      {"compute-perps property suite", criterion6},
      {"main-equivalence property suite", criterion7},
      {"localisation suite", criterion8},
      {"engine self-consistency", criterion9},
      {"rigid enumeration against non-crossing diagonals", criterion10},
  };
  std::vector<int> which;
  for (int k = 1; k < argc; ++k) which.push_back(std::atoi(argv[k]));
  if (which.empty())
    for (int k = 1; k <= static_cast<int>(criteria.size()); ++k) which.push_back(k);

  int failed = 0;
  for (int k : which) {
    if (k < 1 || k > static_cast<int>(criteria.size())) {
      std::printf("unknown criterion %d\n", k);
      return 2;
    }
    const auto& [title, body] = criteria[static_cast<size_t>(k - 1)];
    const auto t0 = std::chrono::steady_clock::now();
    Result res;
    try {
      res = body();
    } catch (const std::exception& e) {
      res.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.1f s", secs);
    res.expect(secs < kTimeLimitSeconds, std::string("runtime ") + buf + " < 60 s");
    std::printf("criterion %2d: %s  [tolerance: exact; %s]  %s\n", k, res.pass ? "PASS" : "FAIL", buf,
                title.c_str());
    for (const auto& l : res.lines) std::printf("      %s\n", l.c_str());
    std::fflush(stdout);
    failed += !res.pass;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(which.size()) - failed, which.size());
  return failed == 0 ? 0 : 1;
}
