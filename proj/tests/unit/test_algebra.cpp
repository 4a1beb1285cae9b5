#include "doctest.h"
#include "rmw/algebra.hpp"

using namespace rmw;

TEST_SUITE("algebra") {
  TEST_CASE("self-injective Nakayama algebra") {
    const auto A = nakayama_cyclic(3, 3);
    CHECK(A->num_vertices() == 3);
    CHECK(A->dim() == 9);  // three uniserial projectives of length 3
    CHECK(A->self_injective());
    CHECK(A->check_associative());
    for (int v = 0; v < 3; ++v) {
      CHECK(projective_module(A, v).total_dim() == 3);
      CHECK(injective_module(A, v).total_dim() == 3);
      // Omega of a simple is the radical of its projective cover.
      CHECK(syzygy(simple_module(A, v)).total_dim() == 2);
      CHECK(is_indecomposable(syzygy(simple_module(A, v))));
    }
  }

  TEST_CASE("path algebra of a linear A3 quiver is not self-injective") {
    const auto A = linear_path_algebra(3);
    CHECK(A->dim() == 6);
    CHECK_FALSE(A->self_injective());
    const auto parts = decompose(regular_module(A));
    CHECK(parts.size() == 3);
    for (const auto& s : parts) CHECK(is_projective_indec(s.mod));
  }

  TEST_CASE("truncated polynomial ring") {
    const auto A = truncated_loop(4);
    CHECK(A->dim() == 4);
    CHECK(A->self_injective());
    const Module S = simple_module(A, 0);
    CHECK(hom_basis(regular_module(A), S).cols() == 1);
    CHECK(hom_basis(S, regular_module(A)).cols() == 1);  // the socle
  }

  TEST_CASE("Hom from a projective is evaluation at its vertex") {
    const auto A = nakayama_cyclic(3, 3);
    const Module M = direct_sum(A, {simple_module(A, 0), projective_module(A, 1), syzygy(simple_module(A, 2))}).sum;
    for (int v = 0; v < 3; ++v) CHECK(hom_basis(projective_module(A, v), M).cols() == M.dim[static_cast<size_t>(v)]);
  }

  TEST_CASE("Krull-Schmidt decomposition of a direct sum") {
    const auto A = nakayama_cyclic(3, 3);
    const Module M = direct_sum(A, {simple_module(A, 0), simple_module(A, 0), projective_module(A, 2)}).sum;
    const auto classes = decompose_classes(M);
    CHECK(classes.size() == 2);
    int total = 0;
    for (const auto& c : classes) total += c.multiplicity;
    CHECK(total == 3);
    CHECK(strip_projectives(M).total_dim() == 2);
  }

  TEST_CASE("kernels, cokernels and covers") {
    const auto A = nakayama_cyclic(2, 3);
    const Module S = simple_module(A, 0);
    const Cover pc = proj_cover(S);
    CHECK(map_is_surjective(pc.map));
    const SubModule k = kernel(pc.P, S, pc.map);
    CHECK(k.sub.total_dim() == pc.P.total_dim() - 1);
    const Cover ih = inj_hull(S);
    CHECK(map_is_injective(ih.map));
    CHECK(cokernel(S, ih.P, ih.map).quot.total_dim() == ih.P.total_dim() - 1);
  }

  TEST_CASE("JSON round trip and input errors") {
    const auto A = nakayama_cyclic(3, 2);
    const auto B = algebra_from_json_text(algebra_to_json_text(*A));
    CHECK(B->dim() == A->dim());
    CHECK(B->self_injective());
    CHECK_THROWS_AS(algebra_from_json_text("{ not json"), InputError);
    CHECK_THROWS_AS(load_algebra("/nonexistent/algebra.json"), InputError);
    CHECK_THROWS_AS(build_algebra({"1"}, {{"x", 0, 0}}, {{{{Q(1), {0}}}}}), InputError);  // relation of length 1
  }
}
