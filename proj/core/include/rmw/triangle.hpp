// Triangles, approximations and ideals in a finite category with Serre
// functor.
//
// The cone of f: X -> Y is computed intrinsically from Hom data.  The functor
// F = Hom(-,Y)/Im Hom(-,f) embeds into Hom(-,Z); its injective envelope in
// the (Frobenius) category of finitely presented functors is Hom(-, Z1) with
// Z1 = sum of S W over the socle of F, and the remaining summand of Z is
// Sigma V for every V in the socle part of Ker Hom(-,f) pushed to Sigma X.
// The third map is then chosen among solutions of h g = 0, (Sigma f) h = 0
// and the triangle is certified by exactness of the long Hom sequence.
#pragma once

#include <optional>
#include <vector>

#include "rmw/fincat.hpp"

namespace rmw {

struct Triangle {
  Obj X, Y, Z;
  Morph f, g, h;  // X -f-> Y -g-> Z -h-> Sigma X
};

// Triangle X -f-> Y -> Z -> Sigma X.
Triangle cone(const FinCat& C, const Morph& f);
// Triangle Z -> X -f-> Y -> Sigma Z (f becomes the second map).
Triangle cocone(const FinCat& C, const Morph& f);
// Exactness of Hom(W, -) applied to X -> Y -> Z -> Sigma X -> Sigma Y for
// every indecomposable W, plus vanishing of consecutive composites.
// Returns "" on success.
std::string check_exact(const FinCat& C, const Triangle& t);

struct Approx {
  Obj A;
  Morph map;  // A -> X (right) or X -> A (left)
};
// Minimal right add G-approximation of X.
Approx min_right_approx(const LinCat& C, const Obj& X, const std::vector<int>& G);
// Minimal left add G-approximation of X (computed in the opposite category).
Approx min_left_approx(const FinCat& C, const Obj& X, const std::vector<int>& G);
// Right-minimality certificate: every phi with alpha phi = 0 is radical.
bool is_right_minimal(const LinCat& C, const Morph& alpha);
// Whether every indecomposable map G -> X factors through alpha.
bool is_right_approx(const LinCat& C, const Morph& alpha, const std::vector<int>& G);

// Solutions of alpha o u = f (u: X -> A) and of v o beta = f (v: B -> Y).
std::optional<Morph> factor_through(const LinCat& C, const Morph& alpha, const Morph& f);
std::optional<Morph> factor_through_left(const LinCat& C, const Morph& beta, const Morph& f);

// Membership of f in the ideal (G) of maps factoring through add G, with a
// witness f = alpha o u.
struct IdealWitness {
  Morph u, alpha;
};
std::optional<IdealWitness> ideal_membership(const LinCat& C, const Morph& f, const std::vector<int>& G);

bool in_add(const Obj& X, const std::vector<int>& G);
std::vector<int> distinct(const Obj& X);

}  // namespace rmw
