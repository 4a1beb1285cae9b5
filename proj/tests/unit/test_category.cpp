#include "doctest.h"
#include "rmw/mesh.hpp"
#include "rmw/suites.hpp"
#include "rmw/triangle.hpp"

using namespace rmw;

namespace {

const std::vector<OrbitSpec> kPresetSpecs{{9, 3, 1}, {5, -2, 1}, {3, -1, 1}, {4, -1, 1}};

}  // namespace

TEST_SUITE("category") {
  TEST_CASE("structural self-checks of the orbit categories") {
    for (const auto& s : kPresetSpecs) {
      CAPTURE(s.str());
      const CategoryPtr cat = make_category(build_mesh_category(s));
      const FinCat& C = cat->cat();
      CHECK(C.check_axioms() == "");
      CHECK(C.check_sigma_functor() == "");
      CHECK(C.check_serre_pairing() == "");
      CHECK(C.check_serre_is_tau_sigma() == "");
      CHECK(C.check_serre_dimensions() == "");
      CHECK(serre_duality_symmetry(C).pass);
      CHECK(serre_equals_tau_sigma(C).pass);
    }
  }

  TEST_CASE("cones of all basis maps are exact triangles") {
    for (const auto& s : std::vector<OrbitSpec>{{9, 3, 1}, {3, -1, 1}}) {
      const CategoryPtr cat = make_category(build_mesh_category(s));
      const FinCat& C = cat->cat();
      for (int x = 0; x < C.size(); ++x)
        for (int y = 0; y < C.size(); ++y)
          for (const Morph& f : hom_basis(C, {x}, {y})) {
            const Triangle t = cone(C, f);
            CHECK(check_exact(C, t) == "");
          }
    }
  }

  TEST_CASE("cone of an identity is zero and cone of zero is X[1] + Y") {
    const CategoryPtr cat = make_category(build_mesh_category({4, -1, 1}));
    const FinCat& C = cat->cat();
    CHECK(cone(C, id_morph(C, {0})).Z.empty());
    const Triangle t = cone(C, zero_morph(C, {0}, {1}));
    CHECK(same_multiset(t.Z, {C.sigma(0), 1}));
  }

  TEST_CASE("cocone is the rotated cone") {
    const CategoryPtr cat = make_category(build_mesh_category({9, 3, 1}));
    const FinCat& C = cat->cat();
    for (int x = 0; x < C.size(); ++x)
      for (int y = 0; y < C.size(); ++y)
        for (const Morph& f : hom_basis(C, {x}, {y})) {
          const Triangle c = cocone(C, f);
          CHECK(check_exact(C, c) == "");
          CHECK(same_multiset(C.sigma(c.X), cone(C, f).Z));
        }
  }

  TEST_CASE("cone decomposition is invariant under automorphisms of source and target") {
    for (const auto& s : kPresetSpecs) {
      const CategoryPtr cat = make_category(build_mesh_category(s));
      CHECK(cone_representative_change(cat->cat(), 50, 11).pass);
    }
  }

  TEST_CASE("minimal approximations") {
    const CategoryPtr cat = make_category(build_mesh_category({3, -1, 1}));
    const FinCat& C = cat->cat();
    const std::vector<int> G{0, 1};
    for (int x = 0; x < C.size(); ++x) {
      const Approx a = min_right_approx(C, {x}, G);
      CHECK(is_right_approx(C, a.map, G));
      CHECK(is_right_minimal(C, a.map));
    }
  }
}
