#include "doctest.h"
#include "oracles.hpp"
#include "rmw/presets.hpp"
#include "rmw/stable.hpp"
#include "rmw/suites.hpp"

using namespace rmw;

TEST_SUITE("stable") {
  TEST_CASE("stable catalog of self-injective Nakayama algebras") {
    for (const auto& [v, l] : std::vector<std::pair<int, int>>{{1, 2}, {1, 4}, {2, 3}, {3, 3}, {3, 2}, {2, 4}}) {
      CAPTURE(v);
      CAPTURE(l);
      const StableCategory S(nakayama_cyclic(v, l));
      CHECK(S.size() == rmw_oracle::nakayama_stable_count(v, l));
      CHECK(S.cat().check_axioms() == "");
      CHECK(S.cat().check_sigma_functor() == "");
      CHECK(S.cat().check_serre_pairing() == "");
      CHECK(S.cat().check_serre_is_tau_sigma() == "");
    }
  }

  TEST_CASE("almost split sequences") {
    const auto A = nakayama_cyclic(3, 3);
    const StableCategory S(A);
    for (int x = 0; x < S.size(); ++x) {
      const ARSequence ar = ar_sequence(S.module(x));
      CHECK(map_is_injective(ar.f));
      CHECK(map_is_surjective(ar.g));
      CHECK(map_is_zero(compose(ar.g, ar.f)));
      CHECK(ar.E.total_dim() == ar.tauX.total_dim() + S.module(x).total_dim());
    }
  }

  TEST_CASE("preprojective algebra of type A3 has nine stable indecomposables") {
    const StableCategory S(preprojective_A(3));
    CHECK(S.size() == rmw_oracle::orbit_object_count(3, -1, 1));
    CHECK(serre_duality_symmetry(S.cat()).pass);
    CHECK(serre_equals_tau_sigma(S.cat()).pass);
  }

  TEST_CASE("stable cones do not depend on the module representative") {
    const StableCategory S(preprojective_A(3));
    CHECK(stable_cone_representative_change(S, 30, 5).pass);
    const StableCategory N(nakayama_cyclic(3, 3));
    CHECK(stable_cone_representative_change(N, 30, 5).pass);
  }

  TEST_CASE("non-self-injective algebras are rejected") {
    CHECK_THROWS_AS(StableCategory(linear_path_algebra(3)), Error);
  }
}

TEST_SUITE("presets") {
  TEST_CASE("catalog") {
    const auto names = preset_names();
    CHECK(names == std::vector<std::string>{"A3_tm1s1", "A4_tm1s1", "A5_tm2s1", "A9_t3s1"});
    CHECK_THROWS_AS(load_preset_info("A7_nope"), InputError);
  }

  TEST_CASE("labels resolve, coordinates resolve, unknown tokens are input errors") {
    const auto P = load_preset("A9_t3s1");
    CHECK(P->cat().size() == 18);
    CHECK(P->labels().size() == 18);
    CHECK(P->resolve("a") == P->resolve("(0,1)"));
    CHECK(P->resolve("s") == P->resolve("(3,3)"));
    CHECK(P->resolve_list("a, b,(0,3)") == Obj{P->resolve("a"), P->resolve("b"), P->resolve("c")});
    for (int x = 0; x < P->cat().size(); ++x) CHECK(P->resolve(P->label(x)) == x);
    try {
      P->resolve("zz");
      FAIL("expected UnknownLabel");
    } catch (const InputError& e) {
      CHECK(e.code() == "UnknownLabel");
    }
    // A vertex outside ZA_9.
    CHECK_THROWS_AS(P->resolve("(0,10)"), InputError);
  }

  TEST_CASE("orbit-model checks pass for every preset") {
    for (const auto& name : preset_names()) {
      const PresetInfo info = load_preset_info(name);
      for (const auto& step : validate_orbit_model(info.spec)) {
        CAPTURE(name);
        CAPTURE(step.name);
        CHECK(step.pass);
      }
    }
  }

  TEST_CASE("presets with a realising algebra validate and transport labels") {
    for (const char* name : {"A3_tm1s1", "A5_tm2s1"}) {
      CAPTURE(name);
      const PresetValidation v = validate_preset(load_preset_info(name));
      CHECK(v.pass);
      CHECK(v.mismatch == "");
      CHECK(v.stable_objects == v.orbit_objects);
      CHECK(v.transported_labels.size() == load_preset_info(name).labels.size());
    }
  }

  TEST_CASE("presets without a realising algebra report the mismatch") {
    for (const char* name : {"A9_t3s1", "A4_tm1s1"}) {
      CAPTURE(name);
      const PresetValidation v = validate_preset(load_preset_info(name));
      CHECK_FALSE(v.pass);
      CHECK(v.mismatch.rfind("realising_algebra", 0) == 0);
    }
  }

  TEST_CASE("negative control: a Nakayama algebra of the wrong Loewy length") {
    const PresetValidation v = validate_preset(nakayama_cyclic(3, 3), OrbitSpec{3, -1, 1});
    CHECK_FALSE(v.pass);
    CHECK(v.mismatch == "vertex_count: stable catalog has 6 indecomposables, orbit quotient 9");
  }

  TEST_CASE("translation-quiver isomorphism search") {
    // A 3-cycle and its rotation; a 3-cycle against a 3-chain.
    const std::vector<std::vector<int>> cyc{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}};
    const std::vector<std::vector<int>> chain{{0, 1, 0}, {0, 0, 1}, {0, 0, 0}};
    const std::vector<std::vector<int>> hom{{1, 1, 0}, {0, 1, 1}, {1, 0, 1}};
    const std::vector<int> rot{1, 2, 0};
    CHECK(translation_iso(cyc, hom, rot, rot, cyc, hom, rot, rot).has_value());
    CHECK_FALSE(translation_iso(cyc, hom, rot, rot, chain, hom, rot, rot).has_value());
  }
}
