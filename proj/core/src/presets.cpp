#include "rmw/presets.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include "json.hpp"

namespace rmw {

namespace fs = std::filesystem;

std::string preset_data_dir() {
  if (const char* env = std::getenv("RMW_PRESET_DIR"); env != nullptr && *env != '\0') return env;
#ifdef RMW_INSTALLED_PRESET_DIR
  if (fs::is_directory(RMW_INSTALLED_PRESET_DIR)) return RMW_INSTALLED_PRESET_DIR;
#endif
#ifdef RMW_SOURCE_PRESET_DIR
  if (fs::is_directory(RMW_SOURCE_PRESET_DIR)) return RMW_SOURCE_PRESET_DIR;
#endif
  throw InputError("PresetDirNotFound", "set RMW_PRESET_DIR to the preset directory");
}

namespace {

const std::string kSuffix = ".preset.json";

nlohmann::json read_json(const fs::path& p) {
  std::ifstream in(p);
  if (!in) throw InputError("FileNotFound", p.string());
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("ParseError", p.string() + ": " + e.what());
  }
}

}  // namespace

std::vector<std::string> preset_names() {
  std::vector<std::string> out;
  for (const auto& e : fs::directory_iterator(preset_data_dir())) {
    const std::string f = e.path().filename().string();
    if (f.size() > kSuffix.size() && f.compare(f.size() - kSuffix.size(), kSuffix.size(), kSuffix) == 0)
      out.push_back(f.substr(0, f.size() - kSuffix.size()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

PresetInfo load_preset_info(const std::string& name) {
  const fs::path dir = preset_data_dir();
  const fs::path file = dir / (name + kSuffix);
  if (!fs::exists(file)) throw InputError("UnknownPreset", name);
  const auto j = read_json(file);
  PresetInfo info;
  try {
    info.name = j.at("name").get<std::string>();
    info.title = j.value("title", "");
    const auto& s = j.at("spec");
    info.spec = OrbitSpec{s.at("n").get<int>(), s.at("a").get<int>(), s.at("b").get<int>()};
    const auto lj = read_json(dir / j.at("labels").get<std::string>());
    for (const auto& [k, v] : lj.items()) info.labels.emplace_back(k, CoverVertex{v.at(0).get<int>(), v.at(1).get<int>()});
    if (j.contains("algebra") && !j.at("algebra").is_null()) info.algebra_file = (dir / j.at("algebra").get<std::string>()).string();
    info.realisation_note = j.value("realisation_note", "");
  } catch (const nlohmann::json::exception& e) {
    throw InputError("ParseError", file.string() + ": " + e.what());
  }
  return info;
}

Preset::Preset(PresetInfo info)
    : info_(std::move(info)), orbit_(info_.spec), cat_(make_category(build_mesh_category(info_.spec))) {
  for (const auto& [l, v] : info_.labels) {
    if (v.i < 1 || v.i > info_.spec.n) throw InputError("ParseError", "label " + l + " outside ZA_n");
    const int x = orbit_.index(v);
    if (by_id_.count(x)) throw InputError("ParseError", "labels " + by_id_[x] + " and " + l + " name the same object");
    by_label_[l] = x;
    by_id_[x] = l;
  }
}

int Preset::resolve(const std::string& token) const {
  auto it = by_label_.find(token);
  if (it != by_label_.end()) return it->second;
  int p = 0, i = 0;
  char c1 = 0, c2 = 0, c3 = 0;
  std::istringstream ss(token);
  if ((ss >> c1 >> p >> c2 >> i >> c3) && c1 == '(' && c2 == ',' && c3 == ')' && i >= 1 && i <= info_.spec.n) {
    std::string rest;
    if (!(ss >> rest)) return orbit_.index({p, i});
  }
  throw InputError("UnknownLabel", "'" + token + "' in preset " + info_.name);
}

Obj Preset::resolve_list(const std::string& csv) const {
  Obj out;
  // Split on commas outside parentheses so that "(0,1)" stays one token.
  std::string cur;
  int depth = 0;
  auto flush = [&] {
    const auto b = cur.find_first_not_of(" \t");
    const auto e = cur.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(resolve(cur.substr(b, e - b + 1)));
    cur.clear();
  };
  for (char ch : csv) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0)
      flush();
    else
      cur += ch;
  }
  flush();
  return out;
}

std::string Preset::label(int x) const {
  auto it = by_id_.find(x);
  return it != by_id_.end() ? it->second : cat().name(x);
}

std::vector<std::string> Preset::labels() const {
  std::vector<std::string> out;
  for (int x = 0; x < cat().size(); ++x) out.push_back(label(x));
  return out;
}

std::string Preset::obj_label(const Obj& X) const {
  if (X.empty()) return "0";
  std::string s;
  for (size_t k = 0; k < X.size(); ++k) s += (k ? "+" : "") + label(X[k]);
  return s;
}

std::shared_ptr<const Preset> load_preset(const std::string& name) {
  return std::make_shared<const Preset>(load_preset_info(name));
}

std::optional<std::vector<int>> translation_iso(const std::vector<std::vector<int>>& arrowsA,
                                                const std::vector<std::vector<int>>& homA,
                                                const std::vector<int>& sigmaA, const std::vector<int>& tauA,
                                                const std::vector<std::vector<int>>& arrowsB,
                                                const std::vector<std::vector<int>>& homB,
                                                const std::vector<int>& sigmaB, const std::vector<int>& tauB) {
  const int N = static_cast<int>(arrowsA.size());
  if (static_cast<int>(arrowsB.size()) != N) return std::nullopt;
  // Invariant signature: sorted Hom rows and columns and arrow degrees.
  auto signature = [N](const std::vector<std::vector<int>>& arr, const std::vector<std::vector<int>>& hom, int x) {
    std::vector<int> row, col, out, in;
    for (int y = 0; y < N; ++y) {
      row.push_back(hom[x][y]);
      col.push_back(hom[y][x]);
      out.push_back(arr[x][y]);
      in.push_back(arr[y][x]);
    }
    for (auto* v : {&row, &col, &out, &in}) std::sort(v->begin(), v->end());
    std::vector<int> s;
    for (auto* v : {&row, &col, &out, &in}) s.insert(s.end(), v->begin(), v->end());
    s.push_back(hom[x][x]);
    return s;
  };
  std::vector<std::vector<int>> sigA(N), sigB(N);
  for (int x = 0; x < N; ++x) {
    sigA[x] = signature(arrowsA, homA, x);
    sigB[x] = signature(arrowsB, homB, x);
  }
  // Visit A-vertices in BFS order along arrows so constraints propagate.
  std::vector<int> order;
  std::vector<bool> seen(N, false);
  for (int s = 0; s < N; ++s) {
    if (seen[s]) continue;
    std::vector<int> q{s};
    seen[s] = true;
    for (size_t h = 0; h < q.size(); ++h) {
      const int x = q[h];
      order.push_back(x);
      for (int y = 0; y < N; ++y)
        if (!seen[y] && (arrowsA[x][y] || arrowsA[y][x] || y == sigmaA[x] || y == tauA[x])) {
          seen[y] = true;
          q.push_back(y);
        }
    }
  }
  std::vector<int> map(N, -1), used(N, 0);
  auto consistent = [&](int x, int y) {
    if (sigA[x] != sigB[y]) return false;
    for (int u = 0; u < N; ++u) {
      const int v = u == x ? y : map[u];
      if (v < 0) continue;
      if (arrowsA[x][u] != arrowsB[y][v] || arrowsA[u][x] != arrowsB[v][y]) return false;
      if (homA[x][u] != homB[y][v] || homA[u][x] != homB[v][y]) return false;
      if (sigmaA[x] == u && sigmaB[y] != v) return false;
      if (sigmaA[u] == x && sigmaB[v] != y) return false;
      if (tauA[x] == u && tauB[y] != v) return false;
      if (tauA[u] == x && tauB[v] != y) return false;
    }
    return true;
  };
  std::function<bool(size_t)> go = [&](size_t k) -> bool {
    if (k == order.size()) return true;
    const int x = order[k];
    for (int y = 0; y < N; ++y) {
      if (used[y] || !consistent(x, y)) continue;
      map[x] = y;
      used[y] = 1;
      if (go(k + 1)) return true;
      map[x] = -1;
      used[y] = 0;
    }
    return false;
  };
  if (!go(0)) return std::nullopt;
  return map;
}

std::vector<PresetValidation::Step> validate_orbit_model(const OrbitSpec& spec) {
  std::vector<PresetValidation::Step> steps;
  std::optional<OrbitQuotient> O;
  try {
    O.emplace(spec);
    steps.push_back({"free_action", true, std::to_string(O->size()) + " orbits"});
  } catch (const Error& e) {
    steps.push_back({"free_action", false, e.what()});
    return steps;
  }
  // Hammock formula against mesh knitting on the cover.
  std::string knit;
  for (int x = 0; x < O->size() && knit.empty(); ++x)
    for (const auto& [w, d] : knit_hom_from(spec.n, O->rep(x)))
      if (d != hom_dim_cover(spec.n, O->rep(x), w)) {
        knit = "Hom(" + cover_name(O->rep(x)) + "," + cover_name(w) + "): hammock " +
               std::to_string(hom_dim_cover(spec.n, O->rep(x), w)) + " vs knitting " + std::to_string(d);
        break;
      }
  steps.push_back({"hammock_vs_knitting", knit.empty(), knit});
  FinCat M = build_mesh_category(spec);
  CategoryPtr cat = make_category(std::move(M));
  const FinCat& C = cat->cat();
  const std::pair<const char*, std::string> checks[] = {
      {"category_axioms", C.check_axioms()},
      {"sigma_functor", C.check_sigma_functor()},
      {"serre_pairing", C.check_serre_pairing()},
      {"serre_is_tau_sigma", C.check_serre_is_tau_sigma()},
      {"serre_dimensions", C.check_serre_dimensions()},
  };
  for (const auto& [n, r] : checks) steps.push_back({n, r.empty(), r});
  const bool irr = quiver_of(C) == O->mesh_arrows();
  steps.push_back({"irreducible_maps_match_mesh", irr, irr ? "" : "rad/rad^2 differs from the mesh arrows"});
  return steps;
}

PresetValidation validate_preset(const AlgebraPtr& A, const OrbitSpec& spec,
                                 const std::vector<std::pair<std::string, CoverVertex>>& labels) {
  PresetValidation r;
  auto fail = [&](const std::string& step, const std::string& what) {
    r.steps.push_back({step, false, what});
    if (r.mismatch.empty()) r.mismatch = step + ": " + what;
    r.pass = false;
    return r;
  };
  std::optional<OrbitQuotient> O;
  try {
    O.emplace(spec);
  } catch (const Error& e) {
    return fail("free_action", e.what());
  }
  r.orbit_objects = O->size();
  std::unique_ptr<StableCategory> S;
  try {
    S = std::make_unique<StableCategory>(A);
  } catch (const Error& e) {
    return fail("stable_category", e.what());
  }
  r.stable_objects = S->size();
  if (S->size() != O->size())
    return fail("vertex_count", "stable catalog has " + std::to_string(S->size()) + " indecomposables, orbit quotient " +
                                    std::to_string(O->size()));
  r.steps.push_back({"vertex_count", true, std::to_string(S->size())});
  const FinCat& SC = S->cat();
  const std::pair<const char*, std::string> checks[] = {
      {"stable_axioms", SC.check_axioms()},
      {"stable_sigma_functor", SC.check_sigma_functor()},
      {"stable_serre_pairing", SC.check_serre_pairing()},
      {"stable_serre_is_tau_sigma", SC.check_serre_is_tau_sigma()},
  };
  for (const auto& [n, res] : checks) {
    if (!res.empty()) return fail(n, res);
    r.steps.push_back({n, true, ""});
  }
  if (quiver_of(SC) != S->ar_arrows()) return fail("irreducible_maps", "rad/rad^2 differs from the AR quiver");
  r.steps.push_back({"irreducible_maps", true, ""});
  CategoryPtr mcat = make_category(build_mesh_category(spec));
  const FinCat& MC = mcat->cat();
  std::vector<int> sA(SC.size()), tA(SC.size()), sB(MC.size()), tB(MC.size());
  for (int x = 0; x < SC.size(); ++x) {
    sA[x] = SC.sigma(x);
    tA[x] = SC.tau(x);
  }
  for (int x = 0; x < MC.size(); ++x) {
    sB[x] = MC.sigma(x);
    tB[x] = MC.tau(x);
  }
  const auto hA = hom_dims(SC), hB = hom_dims(MC);
  // Arrow count and Hom table totals first, to name the first disagreeing datum.
  int arrA = 0, arrB = 0, homSumA = 0, homSumB = 0;
  for (int x = 0; x < SC.size(); ++x)
    for (int y = 0; y < SC.size(); ++y) {
      arrA += S->ar_arrows()[x][y];
      arrB += O->mesh_arrows()[x][y];
      homSumA += hA[x][y];
      homSumB += hB[x][y];
    }
  if (arrA != arrB) return fail("arrow_count", std::to_string(arrA) + " vs " + std::to_string(arrB));
  if (homSumA != homSumB) return fail("hom_total", std::to_string(homSumA) + " vs " + std::to_string(homSumB));
  auto iso = translation_iso(S->ar_arrows(), hA, sA, tA, O->mesh_arrows(), hB, sB, tB);
  if (!iso) return fail("translation_quiver_iso", "no isomorphism respecting arrows, Hom dimensions, Sigma and tau");
  r.steps.push_back({"translation_quiver_iso", true, ""});
  r.iso = *iso;
  std::vector<int> inv(iso->size());
  for (size_t x = 0; x < iso->size(); ++x) inv[(*iso)[x]] = static_cast<int>(x);
  for (const auto& [l, v] : labels) r.transported_labels.emplace_back(l, SC.name(inv[O->index(v)]));
  r.pass = true;
  return r;
}

PresetValidation validate_preset(const PresetInfo& info) {
  PresetValidation r;
  auto steps = validate_orbit_model(info.spec);
  bool ok = true;
  for (const auto& s : steps) {
    if (!s.pass && ok) {
      r.mismatch = s.name + ": " + s.detail;
      ok = false;
    }
  }
  r.steps = steps;
  if (!info.algebra_file) {
    r.steps.push_back({"realising_algebra", false, info.realisation_note});
    if (r.mismatch.empty()) r.mismatch = "realising_algebra: none shipped (" + info.realisation_note + ")";
    r.pass = false;
    try {
      r.orbit_objects = OrbitQuotient(info.spec).size();
    } catch (const Error&) {
    }
    return r;
  }
  auto sub = validate_preset(load_algebra(*info.algebra_file), info.spec, info.labels);
  r.steps.insert(r.steps.end(), sub.steps.begin(), sub.steps.end());
  if (r.mismatch.empty()) r.mismatch = sub.mismatch;
  r.pass = ok && sub.pass;
  r.orbit_objects = sub.orbit_objects;
  r.stable_objects = sub.stable_objects;
  r.iso = sub.iso;
  r.transported_labels = sub.transported_labels;
  return r;
}

}  // namespace rmw
