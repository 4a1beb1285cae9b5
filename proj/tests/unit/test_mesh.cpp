#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "rmw/mesh.hpp"

using namespace rmw;
using namespace rmw_oracle;

namespace {

const std::vector<OrbitSpec> kPresetSpecs{{9, 3, 1}, {5, -2, 1}, {3, -1, 1}, {4, -1, 1}};

}  // namespace

TEST_SUITE("mesh") {
  TEST_CASE("hammocks agree with Homs between shifted interval modules") {
    for (int n = 1; n <= 6; ++n)
      for (int p = -2; p <= 2; ++p)
        for (int i = 1; i <= n; ++i)
          for (int q = -2 * n - 4; q <= 2 * n + 4; ++q)
            for (int j = 1; j <= n; ++j) {
              CAPTURE(n);
              CAPTURE(p);
              CAPTURE(i);
              CAPTURE(q);
              CAPTURE(j);
              CHECK(hom_dim_cover(n, {p, i}, {q, j}) == d_hom(n, d_from_cover(n, p, i), d_from_cover(n, q, j)));
            }
  }

  TEST_CASE("Sigma and tau on the cover agree with shift and AR translate") {
    for (int n = 1; n <= 6; ++n)
      for (int p = -3; p <= 3; ++p)
        for (int i = 1; i <= n; ++i) {
          const DObj x = d_from_cover(n, p, i);
          const CoverVertex s = cover_sigma(n, {p, i});
          CHECK(d_from_cover(n, s.p, s.i) == d_shift(x, 1));
          const CoverVertex t = cover_tau({p, i});
          CHECK(d_from_cover(n, t.p, t.i) == d_tau(n, x));
          const CoverVertex back = cover_sigma_inv(n, s);
          CHECK(back == CoverVertex{p, i});
        }
  }

  TEST_CASE("knitting reproduces the hammock") {
    for (int n = 1; n <= 7; ++n)
      for (int i = 1; i <= n; ++i) {
        const CoverVertex v{0, i};
        int nonzero = 0;
        for (const auto& [w, d] : knit_hom_from(n, v)) {
          CHECK(d == hom_dim_cover(n, v, w));
          nonzero += d > 0;
        }
        CHECK(nonzero == static_cast<int>(hammock(n, v).size()));
      }
  }

  TEST_CASE("orbit categories: object counts and Hom tables") {
    for (const auto& s : kPresetSpecs) {
      CAPTURE(s.str());
      const FinCat C = build_mesh_category(s);
      const OrbitQuotient Q(s);
      CHECK(C.size() == orbit_object_count(s.n, s.a, s.b));
      for (int x = 0; x < C.size(); ++x)
        for (int y = 0; y < C.size(); ++y) {
          const auto u = Q.rep(x), v = Q.rep(y);
          CHECK(C.dim(x, y) == orbit_hom(s.n, s.a, s.b, u.p, u.i, v.p, v.i));
        }
    }
  }

  TEST_CASE("the generator acts freely on the presets and not on trivial data") {
    CHECK(OrbitQuotient({9, 3, 1}).size() == 18);
    CHECK_THROWS_AS(OrbitQuotient({3, 0, 0}), Error);
    CHECK_THROWS_AS(OrbitQuotient({0, 1, 0}), InputError);
  }

  TEST_CASE("mesh arrows: every object of a cluster category of A_n has 1 or 2 arrows out") {
    const OrbitQuotient Q({4, -1, 1});
    const auto arrows = Q.mesh_arrows();
    for (const auto& row : arrows) {
      int out = 0;
      for (int a : row) out += a;
      CHECK(out >= 1);
      CHECK(out <= 2);
    }
  }
}
