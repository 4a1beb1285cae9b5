#include "rmw/suites.hpp"

#include <algorithm>
#include <random>

namespace rmw {

namespace {

std::string sub_str(const LinCat& C, const Sub& s) { return "{" + obj_str(C, s) + "}"; }

}  // namespace

PerpCheck check_compute_perps(const FinCat& C, const Obj& T, const Obj& R) {
  PerpCheck r;
  const Mutation m = mutate(C, T, R);
  r.cbar = cbar_T(C, T, m.Tbar);
  r.cbar_alt = cbar_T_alt(C, m.Tbar, m.Tprime);
  const Sub tbar_perp = perp_right(C, m.Tbar);
  r.cbar_perp = sub_intersection(r.cbar, tbar_perp);
  r.sigma_Tprime = make_sub(C.sigma(m.Tprime));
  r.tau_cbar = make_sub(C.tau(r.cbar));
  r.tau_cbar_perp = sub_intersection(r.tau_cbar, tbar_perp);
  r.sinv_ST = make_sub(C.sigma_inv(C.serre(T)));
  const Sub star = star_set(C, make_sub(C.sigma_inv(C.serre(m.Tbar))), make_sub(C.serre(m.Tprime)));
  auto fail = [&](const std::string& what) {
    if (r.failure.empty()) r.failure = "T=" + obj_str(C, T) + " R=" + obj_str(C, R) + ": " + what;
  };
  if (r.cbar != r.cbar_alt) fail("T*Sigma Tbar = " + sub_str(C, r.cbar) + " but Tbar*Sigma T' = " + sub_str(C, r.cbar_alt));
  if (r.cbar_perp != r.sigma_Tprime)
    fail("Cbar cap Tbar^perp = " + sub_str(C, r.cbar_perp) + " but add Sigma T' = " + sub_str(C, r.sigma_Tprime));
  if (r.tau_cbar != star)
    fail("tau Cbar = " + sub_str(C, r.tau_cbar) + " but Sigma^-1 S Tbar * S T' = " + sub_str(C, star));
  if (r.tau_cbar_perp != r.sinv_ST)
    fail("tau Cbar cap Tbar^perp = " + sub_str(C, r.tau_cbar_perp) + " but add Sigma^-1 S T = " + sub_str(C, r.sinv_ST));
  r.pass = r.failure.empty();
  return r;
}

std::vector<Split> all_splits(const std::vector<Obj>& objects) {
  std::vector<Split> out;
  for (const Obj& T : objects) {
    if (T.empty() || T.size() > 20) continue;
    for (uint32_t mask = 1; mask < (1u << T.size()); ++mask) {
      Obj R;
      for (size_t k = 0; k < T.size(); ++k)
        if (mask >> k & 1u) R.push_back(T[k]);
      out.emplace_back(T, R);
    }
  }
  return out;
}

std::vector<Split> sample_splits(const std::vector<Split>& splits, size_t min_count) {
  if (splits.size() <= min_count) return splits;
  const size_t stride = splits.size() / min_count;
  std::vector<Split> out;
  for (size_t k = 0; k < splits.size(); k += stride) out.push_back(splits[k]);
  return out;
}

std::vector<Split> scan_order(std::vector<Split> splits, uint64_t seed) {
  std::mt19937_64 g(seed);
  std::shuffle(splits.begin(), splits.end(), g);
  return splits;
}

namespace {

template <class F>
SuiteReport run_suite(const FinCat& C, const std::vector<Split>& splits, F&& body) {
  SuiteReport rep;
  for (const auto& [T, R] : splits) {
    std::string failure;
    try {
      failure = body(T, R);
    } catch (const Error& e) {
      if (e.code() == "RigidityLost") {
        ++rep.outside_hypotheses;
        continue;
      }
      failure = "T=" + obj_str(C, T) + " R=" + obj_str(C, R) + ": " + e.what();
    }
    ++rep.tested;
    if (!failure.empty()) {
      ++rep.failed;
      rep.failures.push_back(failure);
    }
  }
  // Sorted so that the report does not depend on the scan order.
  std::sort(rep.failures.begin(), rep.failures.end());
  rep.pass = rep.failed == 0 && rep.tested > 0;
  return rep;
}

}  // namespace

SuiteReport perp_suite(const FinCat& C, const std::vector<Split>& splits) {
  return run_suite(C, splits, [&](const Obj& T, const Obj& R) { return check_compute_perps(C, T, R).failure; });
}

SuiteReport main_equivalence_suite(const FinCat& C, const std::vector<Split>& splits) {
  return run_suite(C, splits, [&](const Obj& T, const Obj& R) -> std::string {
    // Mutation first so that splits outside the hypotheses are classified
    // as such rather than as equivalence failures.
    mutate(C, T, R);
    const MainReport rep = verify_main_equivalence(C, T, R);
    if (rep.pass) return "";
    return "T=" + obj_str(C, T) + " R=" + obj_str(C, R) + ": " + (rep.failures.empty() ? "failed" : rep.failures.front());
  });
}

Check serre_duality_symmetry(const FinCat& C) {
  for (int x = 0; x < C.size(); ++x)
    for (int y = 0; y < C.size(); ++y)
      if (C.dim(x, y) != C.dim(y, C.serre(x)))
        return {"serre_duality_symmetry", false,
                "dim C(" + C.name(x) + "," + C.name(y) + ") = " + std::to_string(C.dim(x, y)) + " but dim C(" +
                    C.name(y) + ",S " + C.name(x) + ") = " + std::to_string(C.dim(y, C.serre(x)))};
  const std::string pairing = C.check_serre_pairing();
  if (!pairing.empty()) return {"serre_duality_symmetry", false, pairing};
  return {"serre_duality_symmetry", true, std::to_string(C.size() * C.size()) + " pairs"};
}

Check serre_equals_tau_sigma(const FinCat& C) {
  for (int x = 0; x < C.size(); ++x)
    if (C.serre(x) != C.tau(C.sigma(x)))
      return {"serre_equals_tau_sigma", false, "S " + C.name(x) + " = " + C.name(C.serre(x)) + " but tau Sigma = " +
                                                   C.name(C.tau(C.sigma(x)))};
  return {"serre_equals_tau_sigma", true, std::to_string(C.size()) + " objects"};
}

namespace {

// A random automorphism of an indecomposable x: a nonzero multiple of the
// identity plus a random radical endomorphism.
Vec random_automorphism(const LinCat& C, int x, Rng& rng) {
  Vec v = C.id(x);
  Q lead = 0;
  while (lead == 0) lead = rng.small_q();
  for (auto& c : v) c *= lead;
  const Mat& rad = C.rad(x, x);
  if (rad.cols() > 0) v = vadd(v, rad * rng.random_vec(rad.cols()));
  return v;
}

std::vector<std::pair<int, int>> nonzero_pairs(const LinCat& C) {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < C.size(); ++x)
    for (int y = 0; y < C.size(); ++y)
      if (C.dim(x, y) > 0) out.emplace_back(x, y);
  return out;
}

Vec random_nonzero(Rng& rng, int n) {
  Vec v = rng.random_vec(n);
  while (std::all_of(v.begin(), v.end(), [](const Q& q) { return q == 0; })) v = rng.random_vec(n);
  return v;
}

}  // namespace

Check cone_representative_change(const FinCat& C, int pairs, uint64_t seed) {
  Rng rng(seed);
  const auto nz = nonzero_pairs(C);
  if (nz.empty()) return {"cone_representative_change", true, "no nonzero morphisms"};
  for (int t = 0; t < pairs; ++t) {
    const auto [x, y] = nz[rng.small_int(0, static_cast<int>(nz.size()) - 1)];
    Morph f{{x}, {y}, {random_nonzero(rng, C.dim(x, y))}};
    Morph u{{y}, {y}, {random_automorphism(C, y, rng)}};
    Morph v{{x}, {x}, {random_automorphism(C, x, rng)}};
    Morph g = compose(C, u, compose(C, f, v));
    const Obj z1 = sorted(cone(C, f).Z), z2 = sorted(cone(C, g).Z);
    if (z1 != z2)
      return {"cone_representative_change", false,
              "cone of a map " + C.name(x) + "->" + C.name(y) + ": " + obj_str(C, z1) + " vs " + obj_str(C, z2)};
  }
  return {"cone_representative_change", true, std::to_string(pairs) + " random pairs"};
}

Check stable_cone_representative_change(const StableCategory& S, int pairs, uint64_t seed) {
  Rng rng(seed);
  const FinCat& C = S.cat();
  const auto nz = nonzero_pairs(C);
  if (nz.empty()) return {"stable_cone_representative_change", true, "no nonzero morphisms"};
  for (int t = 0; t < pairs; ++t) {
    const auto [x, y] = nz[rng.small_int(0, static_cast<int>(nz.size()) - 1)];
    const Vec coords = random_nonzero(rng, C.dim(x, y));
    const ModuleMap f = S.representative(x, y, coords);
    const ModuleMap f2 = add_maps(f, S.random_projective_map(x, y, rng));
    if (S.reduce(x, y, f2) != coords)
      return {"stable_cone_representative_change", false, "representative change altered the stable class"};
    const Obj z1 = sorted(S.cone_pushout(x, y, f)), z2 = sorted(S.cone_pushout(x, y, f2));
    const Obj z3 = sorted(cone(C, Morph{{x}, {y}, {coords}}).Z);
    if (z1 != z2 || z1 != z3)
      return {"stable_cone_representative_change", false,
              "cone of a map " + C.name(x) + "->" + C.name(y) + ": " + obj_str(C, z1) + " / " + obj_str(C, z2) +
                  " / intrinsic " + obj_str(C, z3)};
  }
  return {"stable_cone_representative_change", true, std::to_string(pairs) + " random pairs"};
}

}  // namespace rmw
