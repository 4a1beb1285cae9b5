#include <algorithm>

#include "doctest.h"
#include "rmw/figures.hpp"

using namespace rmw;

namespace {

int count(const std::string& s, const std::string& needle) {
  int n = 0;
  for (size_t at = s.find(needle); at != std::string::npos; at = s.find(needle, at + 1)) ++n;
  return n;
}

const std::vector<std::string>* find_set(const FigureResult& r, const std::string& name) {
  for (const auto& [n, v] : r.sets)
    if (n == name) return &v;
  return nullptr;
}

}  // namespace

TEST_SUITE("figures") {
  TEST_CASE("every worked example reproduces and verifies") {
    for (const auto& spec : figure_specs()) {
      CAPTURE(spec.id);
      const FigureResult r = reproduce_figure(spec);
      for (const auto& c : r.checks) {
        CAPTURE(c.name);
        CAPTURE(c.detail);
        CHECK(c.pass);
      }
      CHECK(r.pass());
    }
  }

  TEST_CASE("figure 1: eighteen labelled vertices, fourteen encircled") {
    const FigureResult r = reproduce_figure("1");
    REQUIRE(!r.quivers.empty());
    const QuiverPicture& q = r.quivers.front();
    CHECK(q.labels.size() == 18);
    CHECK(std::count(q.marked.begin(), q.marked.end(), true) == 14);
    const std::string dot = q.dot();
    CHECK(count(dot, "shape=circle") == 14);
    CHECK(count(dot, "shape=plaintext") == 4);
  }

  TEST_CASE("figure 4: two quotient quivers and an isomorphism certificate") {
    const FigureResult r = reproduce_figure("4");
    CHECK(r.quivers.size() >= 2);
    REQUIRE(!r.certificates.empty());
    CHECK(r.certificates.front().map.size() == 4);
  }

  TEST_CASE("figure 5: shifts of T' are encircled") {
    const FigureResult r = reproduce_figure("5");
    const auto* sig = find_set(r, "Sigma T'");
    REQUIRE(sig != nullptr);
    auto s = *sig;
    std::sort(s.begin(), s.end());
    CHECK(s == std::vector<std::string>{"e", "f", "g", "h"});
  }

  TEST_CASE("unknown figure") {
    CHECK_THROWS_AS(figure_spec("6"), InputError);
  }
}
