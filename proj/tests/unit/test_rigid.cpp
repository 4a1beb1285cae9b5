#include <algorithm>
#include <map>

#include "doctest.h"
#include "oracles.hpp"
#include "rmw/modcat.hpp"
#include "rmw/presets.hpp"
#include "rmw/rigid.hpp"
#include "rmw/subcat.hpp"

using namespace rmw;

namespace {

std::vector<std::string> labels(const Preset& P, const std::vector<int>& xs) {
  std::vector<std::string> out;
  for (int x : xs) out.push_back(P.label(x));
  std::sort(out.begin(), out.end());
  return out;
}

using Names = std::vector<std::string>;

}  // namespace

TEST_SUITE("rigid") {
  TEST_CASE("basic rigid objects of cluster categories match non-crossing diagonals") {
    for (const auto& [name, polygon] : std::vector<std::pair<std::string, int>>{{"A3_tm1s1", 6}, {"A4_tm1s1", 7}}) {
      CAPTURE(name);
      const auto P = load_preset(name);
      const FinCat& C = P->cat();
      const auto oracle = rmw_oracle::noncrossing_diagonals(polygon);
      const auto rigid = enumerate_basic_rigid(C);
      CHECK(static_cast<long>(rigid.size()) == oracle.total);
      std::map<size_t, long> by_size;
      long ct = 0;
      for (const Obj& X : rigid) {
        ++by_size[X.size()];
        ct += is_cluster_tilting(C, X);
      }
      for (size_t k = 0; k < oracle.by_size.size(); ++k) CHECK(by_size[k] == oracle.by_size[k]);
      CHECK(ct == oracle.triangulations);
    }
  }

  TEST_CASE("mutation of a+b+c at c in the A9 orbit category") {
    const auto P = load_preset("A9_t3s1");
    const FinCat& C = P->cat();
    const Obj T = P->resolve_list("a,b,c"), R = P->resolve_list("c");
    CHECK(is_cluster_tilting(C, T));
    const auto q = endo_quiver(C, T);
    CHECK(q[2][2] == 1);  // loop at c
    const Mutation m = mutate(C, T, R);
    CHECK(labels(*P, m.Tprime) == Names{"a", "b", "s"});
    CHECK(labels(*P, m.Rstar) == Names{"s"});
    CHECK(labels(*P, m.B) == Names{"b", "b"});
    CHECK(labels(*P, m.exchange.X) == Names{"s"});
    CHECK(labels(*P, m.exchange.Z) == Names{"c"});
    CHECK(check_exact(C, m.exchange) == "");
    const Sub cbar = cbar_T(C, T, m.Tbar);
    CHECK(cbar.size() == 14);
    CHECK(labels(*P, sub_difference(all_objects(C), cbar)) == Names{"f", "k", "p", "s"});
    CHECK(cbar == cbar_T_alt(C, m.Tbar, m.Tprime));
  }

  TEST_CASE("mutation of a+c at c in the A9 orbit category") {
    const auto P = load_preset("A9_t3s1");
    const FinCat& C = P->cat();
    const Obj T = P->resolve_list("a,c"), R = P->resolve_list("c");
    const Mutation m = mutate(C, T, R);
    CHECK(labels(*P, m.Tprime) == Names{"a", "n"});
    CHECK(labels(*P, m.B) == Names{"a", "a"});
    const Sub cbar = cbar_T(C, T, m.Tbar);
    CHECK(labels(*P, cbar) == Names{"a", "c", "d", "h", "i", "q"});
    CHECK(labels(*P, C.sigma(m.Tprime)) == Names{"i", "q"});
  }

  TEST_CASE("exchange symmetry: mutating back recovers R") {
    const auto P = load_preset("A4_tm1s1");
    const FinCat& C = P->cat();
    for (const Obj& T : enumerate_basic_rigid(C)) {
      if (!is_cluster_tilting(C, T)) continue;
      for (int r : T) {
        const Mutation m = mutate(C, T, {r});
        CHECK(sorted(comutate(C, m.Rstar, m.Tbar)) == Obj{r});
        const Mutation back = mutate(C, m.Tprime, m.Rstar);
        CHECK(sorted(back.Rstar) == Obj{r});
      }
    }
  }

  TEST_CASE("mutation input errors and loss of rigidity") {
    const auto P = load_preset("A9_t3s1");
    const FinCat& C = P->cat();
    const Obj T = P->resolve_list("a,b,c");
    try {
      mutate(C, T, P->resolve_list("d"));
      FAIL("expected NotASummand");
    } catch (const InputError& e) {
      CHECK(e.code() == "NotASummand");
    }
    CHECK_THROWS_AS(mutate(C, P->resolve_list("a,a"), P->resolve_list("a")), InputError);
    // Outside the 2-Calabi-Yau setting the mutated object can fail to be rigid.
    const auto P5 = load_preset("A5_tm2s1");
    try {
      mutate(P5->cat(), P5->resolve_list("(0,1),(0,2)"), P5->resolve_list("(0,1)"));
      FAIL("expected RigidityLost");
    } catch (const Error& e) {
      CHECK(e.code() == "RigidityLost");
      CHECK_FALSE(e.input_error());
    }
  }
}

TEST_SUITE("subcat") {
  TEST_CASE("perpendicular categories and star products") {
    const auto P = load_preset("A3_tm1s1");
    const FinCat& C = P->cat();
    const Obj T = P->resolve_list("T1,T2,T3");
    // For a cluster-tilting object, C(T, Y) = 0 exactly for Y in add Sigma T.
    CHECK(perp_right(C, T) == make_sub(C.sigma(T)));
    // Dually C(Y, Sigma T) = 0 exactly for Y in add T.
    CHECK(perp_left(C, C.sigma(T)) == make_sub(T));
    const Sub cT = cat_T(C, T);
    CHECK(cT.size() == 9);  // cluster-tilting: C(T) is everything
    for (int x = 0; x < C.size(); ++x) {
      const StarResult r = star_membership(C, {x}, make_sub(T), make_sub(C.sigma(T)));
      CHECK(r.member);
    }
  }

  TEST_CASE("the two descriptions of Cbar(T) agree on all of cluster A3") {
    const auto P = load_preset("A3_tm1s1");
    const FinCat& C = P->cat();
    for (const Obj& T : enumerate_basic_rigid(C))
      for (int r : T) {
        const Mutation m = mutate(C, T, {r});
        CHECK(cbar_T(C, T, m.Tbar) == cbar_T_alt(C, m.Tbar, m.Tprime));
      }
  }
}

TEST_SUITE("modcat") {
  TEST_CASE("module model of End(T) for cluster A3") {
    const auto P = load_preset("A3_tm1s1");
    const FinCat& C = P->cat();
    const ModModel mm = mod_model(C, P->resolve_list("T1,T2,T3"));
    CHECK(mm.model.objects.size() == 6);
    int projective_total = 0;
    for (int v : mm.projective_of) projective_total += v >= 0;
    CHECK(projective_total == 3);
  }

  TEST_CASE("localisation theorems on the A9 configuration a+c at c") {
    const auto P = load_preset("A9_t3s1");
    const FinCat& C = P->cat();
    const Obj T = P->resolve_list("a,c"), R = P->resolve_list("c");
    const TheoremFbarReport f = verify_theorem_fbar(C, T, R);
    CHECK(f.pass);
    CHECK(f.certificate.has_value());
    CHECK(f.primal.E == f.primal.E_def);
    const LocalisationReport l = verify_more_localisations(C, T, R);
    CHECK(l.pass);
    CHECK(l.morphisms_tested > 0);
    CHECK(l.s_count <= l.stilde_count);
  }

  TEST_CASE("main equivalence on the A9 configuration a+b+c at c") {
    const auto P = load_preset("A9_t3s1");
    const MainReport r = verify_main_equivalence(P->cat(), P->resolve_list("a,b,c"), P->resolve_list("c"));
    CHECK(r.pass);
    CHECK(r.P1.objects.size() == 11);
    CHECK(r.P2.objects.size() == 11);
    CHECK(r.quiver_certificate.has_value());
    CHECK(r.unit_iso);
    CHECK(r.counit_iso);
  }
}
