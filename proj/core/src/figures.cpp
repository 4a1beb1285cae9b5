#include "rmw/figures.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>

#include "json.hpp"
#include "rmw/modcat.hpp"

namespace rmw {

std::string QuiverPicture::dot() const { return quiver_dot(name, labels, arrows, marked); }

bool FigureResult::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::vector<FigureSpec> figure_specs() {
  const auto path = std::filesystem::path(preset_data_dir()) / "figures.json";
  std::ifstream in(path);
  if (!in) throw InputError("FileNotFound", path.string());
  std::vector<FigureSpec> out;
  try {
    const auto j = nlohmann::json::parse(in);
    for (const auto& [id, f] : j.items()) {
      FigureSpec s;
      s.id = id;
      s.title = f.value("title", "");
      s.preset = f.at("preset").get<std::string>();
      s.T = f.at("T").get<std::string>();
      s.R = f.at("R").get<std::string>();
      s.components = f.at("components").get<std::vector<std::string>>();
      out.push_back(s);
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError("ParseError", path.string() + ": " + e.what());
  }
  return out;
}

FigureSpec figure_spec(const std::string& id) {
  for (const auto& s : figure_specs())
    if (s.id == id) return s;
  throw InputError("UnknownFigure", id);
}

namespace {

std::vector<std::string> label_list(const Preset& P, const std::vector<int>& ids) {
  std::vector<std::string> out;
  for (int x : ids) out.push_back(P.label(x));
  return out;
}

void add_set(FigureResult& out, const std::string& name, const Preset& P, const std::vector<int>& ids) {
  out.sets.emplace_back(name, label_list(P, ids));
}

void add_check(FigureResult& out, const std::string& name, bool pass, const std::string& detail = "") {
  out.checks.push_back({name, pass, detail});
}

// Quiver iso of two pictures (with Hom tables when both carry them); adds a
// check and, on success, a certificate.
void compare_pictures(FigureResult& out, const std::string& name, const QuiverPicture& a, const QuiverPicture& b,
                      bool expect_iso = true) {
  const bool with_homs = !a.hom_dims.empty() && !b.hom_dims.empty();
  auto iso = quiver_iso(a.arrows, b.arrows, with_homs ? &a.hom_dims : nullptr, with_homs ? &b.hom_dims : nullptr);
  if (expect_iso) {
    add_check(out, name, iso.has_value(),
              iso ? std::to_string(a.labels.size()) + " vertices" : "no isomorphism between " + a.name + " and " + b.name);
    if (iso) out.certificates.push_back(make_certificate(name, a, b, *iso));
  } else {
    // Non-isomorphism of the underlying quivers.
    auto qiso = quiver_iso(a.arrows, b.arrows);
    add_check(out, name, !qiso.has_value(), qiso ? "unexpected isomorphism" : "quivers differ");
  }
}

Sub sigma_sub(const FinCat& C, const Obj& X) { return make_sub(C.sigma(X)); }

}  // namespace

QuiverPicture quotient_picture(const Preset& P, const std::string& name, const Quotient& Q) {
  QuiverPicture q;
  q.name = name;
  q.labels = label_list(P, Q.objects);
  q.arrows = quiver_of(Q.P);
  q.hom_dims = hom_dims(Q.P);
  return q;
}

QuiverPicture ar_picture(const Preset& P, const std::string& name, const Sub& marked) {
  QuiverPicture q;
  q.name = name;
  q.labels = P.labels();
  q.arrows = P.orbit().mesh_arrows();
  q.hom_dims = hom_dims(P.cat());
  for (int x = 0; x < P.cat().size(); ++x) q.marked.push_back(sub_contains(marked, x));
  return q;
}

Certificate make_certificate(const std::string& name, const QuiverPicture& a, const QuiverPicture& b,
                             const std::vector<int>& map) {
  Certificate c{name, a.name, b.name, {}};
  for (size_t i = 0; i < map.size(); ++i) c.map.emplace_back(a.labels[i], b.labels[map[i]]);
  return c;
}

void figure_cbar(const Preset& P, const Obj& T, const Obj& R, FigureResult& out) {
  const FinCat& C = P.cat();
  const Mutation m = mutate(C, T, R);
  add_check(out, "mutation_postconditions", true, "T' = " + P.obj_label(m.Tprime));
  const std::string exact = check_exact(C, m.exchange);
  add_check(out, "exchange_triangle", exact.empty(),
            exact.empty() ? P.obj_label(m.Rstar) + " -> " + P.obj_label(m.B) + " -> " + P.obj_label(R) : exact);
  const PerpCheck pc = check_compute_perps(C, T, R);
  add_check(out, "cbar_perp_identities", pc.pass, pc.failure);
  add_set(out, "T", P, T);
  add_set(out, "R", P, R);
  add_set(out, "B", P, m.B);
  add_set(out, "R*", P, m.Rstar);
  add_set(out, "T'", P, m.Tprime);
  add_set(out, "Sigma T'", P, C.sigma(m.Tprime));
  add_set(out, "Cbar(T)", P, pc.cbar);
  add_set(out, "not in Cbar(T)", P, sub_difference(all_objects(C), pc.cbar));
  out.sets.emplace_back("cluster-tilting", std::vector<std::string>{is_cluster_tilting(C, T) ? "yes" : "no"});
  const auto eq = endo_quiver(C, T);
  std::vector<int> loops;
  for (size_t k = 0; k < T.size(); ++k)
    if (eq[k][k] > 0) loops.push_back(T[k]);
  add_set(out, "loops", P, loops);
  out.quivers.push_back(ar_picture(P, "AR quiver, Cbar(T) encircled", pc.cbar));
}

void figure_main_equivalence(const Preset& P, const Obj& T, const Obj& R, FigureResult& out) {
  const FinCat& C = P.cat();
  const MainReport rep = verify_main_equivalence(C, T, R);
  add_check(out, "main_equivalence", rep.pass,
            rep.pass ? std::to_string(rep.morphisms_checked) + " morphisms checked"
                     : (rep.failures.empty() ? "failed" : rep.failures.front()));
  QuiverPicture a = quotient_picture(P, "Cbar(T)/(Sigma T')", rep.P1);
  QuiverPicture b = quotient_picture(P, "tau Cbar(T)/(tau T)", rep.P2);
  Certificate g{"functor G on objects", a.name, b.name, {}};
  for (size_t i = 0; i < rep.object_map.size(); ++i)
    if (rep.object_map[i] >= 0) g.map.emplace_back(a.labels[i], b.labels[rep.object_map[i]]);
  out.certificates.push_back(g);
  compare_pictures(out, "main_equivalence_quivers_isomorphic", a, b);
  out.quivers.push_back(std::move(a));
  out.quivers.push_back(std::move(b));
}

void figure_quotients(const Preset& P, const Obj& T, const Obj& R, FigureResult& out) {
  const FinCat& C = P.cat();
  const Mutation m = mutate(C, T, R);
  const Sub cbar = cbar_T(C, T, m.Tbar);
  QuiverPicture a = quotient_picture(P, "Cbar(T)/(Sigma T')", quotient_category(C, cbar, sigma_sub(C, m.Tprime)));
  QuiverPicture b = quotient_picture(P, "Cbar(T)/(T)", quotient_category(C, cbar, make_sub(T)));
  compare_pictures(out, "quotients_isomorphic", a, b);
  out.sets.emplace_back("Cbar(T)/(Sigma T') objects", a.labels);
  out.sets.emplace_back("Cbar(T)/(T) objects", b.labels);
  out.quivers.push_back(std::move(a));
  out.quivers.push_back(std::move(b));
}

void figure_deletions(const Preset& P, const Obj& T, const Obj& R, FigureResult& out) {
  const FinCat& C = P.cat();
  const Mutation m = mutate(C, T, R);
  const Sub cbar = cbar_T(C, T, m.Tbar);
  // The encircled quiver is the Gabriel quiver of the full subcategory
  // Cbar(T); restricting only the mesh arrows would miss the irreducible
  // maps of Cbar(T) that factor through objects outside it.
  const auto sub_quiver = quiver_of(full_subcategory(C, cbar).P);
  const auto mesh = P.orbit().mesh_arrows();
  int mesh_a = 0, mesh_b = 0;
  auto deletion = [&](const std::string& name, const Sub& removed, int& mesh_count) {
    std::vector<int> keep;
    for (size_t i = 0; i < cbar.size(); ++i)
      if (!sub_contains(removed, cbar[i])) keep.push_back(static_cast<int>(i));
    QuiverPicture q;
    q.name = name;
    q.arrows.assign(keep.size(), std::vector<int>(keep.size(), 0));
    for (size_t i = 0; i < keep.size(); ++i) {
      q.labels.push_back(P.label(cbar[keep[i]]));
      for (size_t j = 0; j < keep.size(); ++j) {
        q.arrows[i][j] = sub_quiver[keep[i]][keep[j]];
        mesh_count += mesh[cbar[keep[i]]][cbar[keep[j]]];
      }
    }
    return q;
  };
  QuiverPicture a = deletion("encircled quiver minus T", make_sub(T), mesh_a);
  QuiverPicture b = deletion("encircled quiver minus Sigma T'", sigma_sub(C, m.Tprime), mesh_b);
  add_set(out, "Sigma T'", P, C.sigma(m.Tprime));
  out.sets.emplace_back("mesh arrows kept by the two deletions",
                        std::vector<std::string>{std::to_string(mesh_a), std::to_string(mesh_b)});
  compare_pictures(out, "deletions_isomorphic", a, b);
  out.quivers.push_back(std::move(a));
  out.quivers.push_back(std::move(b));
}

namespace {

// Model of mod End(T)^op together with its quotient by the simple at R.
struct SimpleQuotient {
  ModModel mm;
  int simple_catalog = -1;
  Quotient quotient;
};

SimpleQuotient simple_quotient(const FinCat& C, const Obj& T, int summand_pos) {
  SimpleQuotient s{mod_model(C, T), -1, {}};
  s.simple_catalog = s.mm.model.objects[s.mm.simple_of[summand_pos]];
  s.quotient = quotient_category(C, s.mm.cT, sub_union(sigma_sub(C, T), {s.simple_catalog}));
  return s;
}

int position_in(const Obj& X, int x) {
  return static_cast<int>(std::find(X.begin(), X.end(), x) - X.begin());
}

}  // namespace

void figure_nearly_morita(const Preset& P, const Obj& T, const Obj& R, FigureResult& out) {
  const FinCat& C = P.cat();
  if (R.size() != 1) throw InputError("BadFigure", "nearly-Morita picture needs an indecomposable R");
  const Mutation m = mutate(C, T, R);
  add_set(out, "T'", P, m.Tprime);
  const SimpleQuotient g = simple_quotient(C, T, position_in(T, R[0]));
  const SimpleQuotient gp = simple_quotient(C, m.Tprime, position_in(m.Tprime, m.Rstar[0]));
  // S_2 = C(T, Sigma R*) and S_2* = C(T', Sigma R).
  add_check(out, "simple_is_C(T,Sigma R*)", g.simple_catalog == C.sigma(m.Rstar[0]),
            "S = " + P.label(g.simple_catalog));
  add_check(out, "simple_is_C(T',Sigma R)", gp.simple_catalog == C.sigma(R[0]), "S* = " + P.label(gp.simple_catalog));
  QuiverPicture a = quotient_picture(P, "mod Gamma", g.mm.model);
  QuiverPicture b = quotient_picture(P, "mod Gamma'", gp.mm.model);
  compare_pictures(out, "module_categories_not_isomorphic", a, b, false);
  QuiverPicture qa = quotient_picture(P, "mod Gamma/add S", g.quotient);
  QuiverPicture qb = quotient_picture(P, "mod Gamma'/add S*", gp.quotient);
  compare_pictures(out, "quotients_by_simples_isomorphic", qa, qb);
  out.sets.emplace_back("S", std::vector<std::string>{P.label(g.simple_catalog)});
  out.sets.emplace_back("S*", std::vector<std::string>{P.label(gp.simple_catalog)});
  for (auto* q : {&a, &b, &qa, &qb}) out.quivers.push_back(std::move(*q));
}

void figure_module_models(const Preset& P, const Obj& T, const Obj& R, FigureResult& out) {
  const FinCat& C = P.cat();
  if (R.size() != 1) throw InputError("BadFigure", "module-model picture needs an indecomposable R");
  const Mutation m = mutate(C, T, R);
  add_set(out, "T'", P, m.Tprime);
  const SimpleQuotient l = simple_quotient(C, T, position_in(T, R[0]));
  const SimpleQuotient lp = simple_quotient(C, m.Tprime, position_in(m.Tprime, m.Rstar[0]));
  QuiverPicture a = quotient_picture(P, "mod Lambda", l.mm.model);
  QuiverPicture b = quotient_picture(P, "mod Lambda'", lp.mm.model);
  compare_pictures(out, "module_categories_not_isomorphic", a, b, false);
  QuiverPicture qa = quotient_picture(P, "mod Lambda/add S", l.quotient);
  QuiverPicture qb = quotient_picture(P, "mod Lambda'/add S*", lp.quotient);
  out.sets.emplace_back("S", std::vector<std::string>{P.label(l.simple_catalog)});
  out.sets.emplace_back("S*", std::vector<std::string>{P.label(lp.simple_catalog)});
  for (auto* q : {&a, &b, &qa, &qb}) out.quivers.push_back(std::move(*q));
}

void figure_localisation(const Preset& P, const Obj& T, const Obj& R, FigureResult& out) {
  const FinCat& C = P.cat();
  const TheoremFbarReport th = verify_theorem_fbar(C, T, R);
  add_check(out, "theorem_fbar", th.pass, th.failures.empty() ? "" : th.failures.front());
  QuiverPicture e;
  e.name = "E/add Q (model of the localisation at S_B0)";
  e.labels = label_list(P, th.primal.quotient_objects);
  e.arrows = th.primal.quiver;
  e.hom_dims = th.primal.hom_dims;
  QuiverPicture c = quotient_picture(P, "Cbar(T)/(Sigma T')", th.primal.cbar_quotient);
  compare_pictures(out, "localisation_model_matches_cbar_quotient", e, c);
  QuiverPicture ed;
  ed.name = "E'/add Q' (dual model)";
  ed.labels = label_list(P, th.dual.quotient_objects);
  ed.arrows = th.dual.quiver;
  ed.hom_dims = th.dual.hom_dims;
  if (th.certificate) out.certificates.push_back(make_certificate("theorem_A_models", e, ed, *th.certificate));
  add_set(out, "E", P, th.primal.E);
  add_set(out, "B", P, th.primal.B);
  add_set(out, "Q", P, th.primal.Q);
  // Theorem B is applied with B = add S for S the simple at R.
  if (R.size() == 1) {
    const ModModel mm = mod_model(C, T);
    const int simple = mm.model.objects[mm.simple_of[position_in(T, R[0])]];
    add_check(out, "B_is_add_simple", th.primal.B == Sub{simple}, "S = " + P.label(simple));
  }
  const LocalisationReport lr = verify_more_localisations(C, T, R);
  add_check(out, "more_localisations", lr.pass,
            lr.pass ? std::to_string(lr.morphisms_tested) + " morphisms, " + std::to_string(lr.inverse_constructed) +
                          " inverses constructed"
                    : lr.failures.front());
  for (auto* q : {&e, &c, &ed}) out.quivers.push_back(std::move(*q));
}

FigureResult reproduce_figure(const FigureSpec& spec) {
  const auto P = load_preset(spec.preset);
  FigureResult out;
  out.id = spec.id;
  out.title = spec.title;
  out.preset = spec.preset;
  out.T = spec.T;
  out.R = spec.R;
  const Obj T = P->resolve_list(spec.T), R = P->resolve_list(spec.R);
  for (const auto& c : spec.components) {
    if (c == "cbar")
      figure_cbar(*P, T, R, out);
    else if (c == "main_equivalence")
      figure_main_equivalence(*P, T, R, out);
    else if (c == "quotients")
      figure_quotients(*P, T, R, out);
    else if (c == "deletions")
      figure_deletions(*P, T, R, out);
    else if (c == "nearly_morita")
      figure_nearly_morita(*P, T, R, out);
    else if (c == "module_models")
      figure_module_models(*P, T, R, out);
    else if (c == "localisation")
      figure_localisation(*P, T, R, out);
    else
      throw InputError("ParseError", "unknown figure component " + c);
  }
  return out;
}

FigureResult reproduce_figure(const std::string& id) { return reproduce_figure(figure_spec(id)); }

}  // namespace rmw
