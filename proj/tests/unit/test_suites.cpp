#include <algorithm>

#include "doctest.h"
#include "rmw/presets.hpp"
#include "rmw/rigid.hpp"
#include "rmw/suites.hpp"

using namespace rmw;

TEST_SUITE("suites") {
  TEST_CASE("split enumeration and sampling") {
    const std::vector<Obj> objs{{}, {1}, {1, 2}, {1, 2, 3}};
    const auto splits = all_splits(objs);
    CHECK(splits.size() == 1 + 3 + 7);
    CHECK(sample_splits(splits, 100).size() == splits.size());
    const auto sample = sample_splits(splits, 5);
    CHECK(sample.size() >= 5);
    auto a = scan_order(splits, 1), b = scan_order(splits, 2);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
  }

  TEST_CASE("compute-perps suite, exhaustive on cluster A3") {
    const auto P = load_preset("A3_tm1s1");
    const auto splits = all_splits(enumerate_basic_rigid(P->cat()));
    CHECK(splits.size() == 170);
    const SuiteReport r = perp_suite(P->cat(), splits);
    CHECK(r.pass);
    CHECK(r.tested == 170);
    CHECK(r.outside_hypotheses == 0);
  }

  TEST_CASE("main-equivalence suite, exhaustive on cluster A3") {
    const auto P = load_preset("A3_tm1s1");
    const SuiteReport r = main_equivalence_suite(P->cat(), all_splits(enumerate_basic_rigid(P->cat())));
    CHECK(r.pass);
    CHECK(r.failed == 0);
  }

  TEST_CASE("the scan order does not change suite results") {
    const auto P = load_preset("A5_tm2s1");
    const auto sample = sample_splits(all_splits(enumerate_basic_rigid(P->cat())), 200);
    const SuiteReport a = perp_suite(P->cat(), scan_order(sample, 1));
    const SuiteReport b = perp_suite(P->cat(), scan_order(sample, 99));
    CHECK(a.tested == b.tested);
    CHECK(a.outside_hypotheses == b.outside_hypotheses);
    CHECK(a.failures == b.failures);
    CHECK(a.outside_hypotheses > 0);  // the (5,-2,1) category is not 2-Calabi-Yau
  }

  TEST_CASE("a single perps check reports all four sets") {
    const auto P = load_preset("A9_t3s1");
    const PerpCheck c = check_compute_perps(P->cat(), P->resolve_list("a,b,c"), P->resolve_list("c"));
    CHECK(c.pass);
    CHECK(c.cbar.size() == 14);
    CHECK(c.cbar_perp == c.sigma_Tprime);
    CHECK(c.tau_cbar_perp == c.sinv_ST);
  }
}
