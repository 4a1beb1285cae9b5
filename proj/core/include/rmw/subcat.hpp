// Subcategory calculus: perpendicular categories, star products decided by
// approximations, the subcategories C(T) = T * Sigma T and
// Cbar(T) = T * Sigma Tbar, and ideals of maps killed by Hom(G, -).
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rmw/fincat.hpp"
#include "rmw/triangle.hpp"

namespace rmw {

// A subcategory add(G) is represented by the sorted set of catalog ids of
// its indecomposables.
using Sub = std::vector<int>;

Sub make_sub(const Obj& X);
Sub all_objects(const LinCat& C);
Sub sub_union(const Sub& a, const Sub& b);
Sub sub_intersection(const Sub& a, const Sub& b);
Sub sub_difference(const Sub& a, const Sub& b);
bool sub_contains(const Sub& a, int x);
// Image of a set of indecomposables under an object map.
Sub sub_map(const Sub& a, int (FinCat::*fn)(int) const, const FinCat& C);

// Right perpendicular X^perp = {Y : C(X,Y) = 0}; left ^perp X = {Y : C(Y,X) = 0}.
Sub perp_right(const LinCat& C, const Obj& X);
Sub perp_left(const LinCat& C, const Obj& X);

// Whether a morphism f: X -> Y is killed by Hom(G, -), i.e. C(G,f) = 0.
// For G rigid this is membership of f in the ideal (G^perp).
bool killed_by(const LinCat& C, const Obj& G, const Morph& f);
// Whether Hom(G, f) is surjective (resp. injective).
bool hom_surjective(const LinCat& C, const Obj& G, const Morph& f);
bool hom_injective(const LinCat& C, const Obj& G, const Morph& f);

// Star product A * B, decided for pairs with C(A, B) = 0: X lies in A * B
// iff the cone of the minimal right add A-approximation of X lies in add B.
// The witness is the triangle A0 -> X -> B0 -> Sigma A0.
struct StarResult {
  bool member = false;
  Triangle witness;
};
StarResult star_membership(const FinCat& C, const Obj& X, const Sub& A, const Sub& B);

// Full scan of A * B over the catalog.
Sub star_set(const FinCat& C, const Sub& A, const Sub& B);

// C(T) = T * Sigma T.
Sub cat_T(const FinCat& C, const Obj& T);
// Cbar(T) = T * Sigma Tbar.
Sub cbar_T(const FinCat& C, const Obj& T, const Obj& Tbar);
// Cbar(T) computed as Tbar * Sigma T' (the second criterion).
Sub cbar_T_alt(const FinCat& C, const Obj& Tbar, const Obj& Tprime);

}  // namespace rmw
