// Property suites run over many rigid objects: the perpendicular-category
// identities for Cbar(T), the main equivalence on samples, and engine
// self-consistency (Serre duality, S = tau Sigma, independence of cones from
// the chosen representative).
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rmw/fincat.hpp"
#include "rmw/rigid.hpp"
#include "rmw/stable.hpp"
#include "rmw/subcat.hpp"

namespace rmw {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Identities for one split T = Tbar + R (with T' the mutation):
// (a) Cbar(T) computed as T * Sigma Tbar equals Tbar * Sigma T';
// (b) Cbar(T) intersected with Tbar^perp is add Sigma T';
// (c) tau Cbar(T) intersected with Tbar^perp is add Sigma^{-1} S T, and
//     tau Cbar(T) equals the star product Sigma^{-1} S Tbar * S T'.
struct PerpCheck {
  bool pass = false;
  std::string failure;
  Sub cbar, cbar_alt, cbar_perp, sigma_Tprime, tau_cbar, tau_cbar_perp, sinv_ST;
};
// Throws RigidityLost when T' is not rigid (outside the standing hypotheses).
PerpCheck check_compute_perps(const FinCat& C, const Obj& T, const Obj& R);

using Split = std::pair<Obj, Obj>;  // (T, R) with R a nonempty summand of T
// Every split of every object in the list, in a fixed order.
std::vector<Split> all_splits(const std::vector<Obj>& objects);
// At least `min_count` splits (all of them if there are fewer), chosen by a
// fixed stride so that the selection does not depend on any seed.
std::vector<Split> sample_splits(const std::vector<Split>& splits, size_t min_count);
// Permutes a list with a seeded shuffle (scan order only).
std::vector<Split> scan_order(std::vector<Split> splits, uint64_t seed);

struct SuiteReport {
  bool pass = false;
  int tested = 0;                 // splits satisfying the standing hypotheses
  int outside_hypotheses = 0;     // splits where T' is not rigid
  int failed = 0;
  std::vector<std::string> failures;  // all witnesses, sorted
};
SuiteReport perp_suite(const FinCat& C, const std::vector<Split>& splits);
SuiteReport main_equivalence_suite(const FinCat& C, const std::vector<Split>& splits);

// Engine self-consistency.
Check serre_duality_symmetry(const FinCat& C);  // dim C(x,y) = dim C(y,Sx)
Check serre_equals_tau_sigma(const FinCat& C);  // S x = tau Sigma x pointwise
// Cone of f versus cone of u f v for random automorphisms u, v.
Check cone_representative_change(const FinCat& C, int pairs, uint64_t seed);
// Stable category: cone of a module representative f versus f plus a map
// through a projective, both by the injective-hull pushout, and against the
// intrinsic cone computed from Hom data.
Check stable_cone_representative_change(const StableCategory& S, int pairs, uint64_t seed);

}  // namespace rmw
