#include "rmw/subcat.hpp"

#include <algorithm>

namespace rmw {

Sub make_sub(const Obj& X) { return distinct(X); }

Sub all_objects(const LinCat& C) {
  Sub s(C.size());
  for (int x = 0; x < C.size(); ++x) s[x] = x;
  return s;
}

Sub sub_union(const Sub& a, const Sub& b) {
  Sub out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Sub sub_intersection(const Sub& a, const Sub& b) {
  Sub out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Sub sub_difference(const Sub& a, const Sub& b) {
  Sub out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool sub_contains(const Sub& a, int x) { return std::binary_search(a.begin(), a.end(), x); }

Sub sub_map(const Sub& a, int (FinCat::*fn)(int) const, const FinCat& C) {
  Obj out;
  for (int x : a) out.push_back((C.*fn)(x));
  return make_sub(out);
}

Sub perp_right(const LinCat& C, const Obj& X) {
  Sub out;
  for (int y = 0; y < C.size(); ++y)
    if (hom_dim(C, X, {y}) == 0) out.push_back(y);
  return out;
}

Sub perp_left(const LinCat& C, const Obj& X) {
  Sub out;
  for (int y = 0; y < C.size(); ++y)
    if (hom_dim(C, {y}, X) == 0) out.push_back(y);
  return out;
}

bool killed_by(const LinCat& C, const Obj& G, const Morph& f) {
  for (int g : distinct(G)) {
    if (hom_dim(C, {g}, f.src) == 0) continue;
    if (!post_mat(C, f, {g}).is_zero()) return false;
  }
  return true;
}

bool hom_surjective(const LinCat& C, const Obj& G, const Morph& f) {
  for (int g : distinct(G)) {
    const int d = hom_dim(C, {g}, f.tgt);
    if (d == 0) continue;
    if (hom_dim(C, {g}, f.src) == 0 || rank(post_mat(C, f, {g})) != d) return false;
  }
  return true;
}

bool hom_injective(const LinCat& C, const Obj& G, const Morph& f) {
  for (int g : distinct(G)) {
    const int d = hom_dim(C, {g}, f.src);
    if (d == 0) continue;
    if (hom_dim(C, {g}, f.tgt) == 0 || rank(post_mat(C, f, {g})) != d) return false;
  }
  return true;
}

StarResult star_membership(const FinCat& C, const Obj& X, const Sub& A, const Sub& B) {
  if (hom_dim(C, A, B) != 0)
    throw Error("UnsupportedShape", "star product A * B is only decided when C(A,B) = 0");
  StarResult r;
  Approx ap = min_right_approx(C, X, A);
  r.witness = cone(C, ap.map);
  r.member = in_add(r.witness.Z, B);
  return r;
}

Sub star_set(const FinCat& C, const Sub& A, const Sub& B) {
  Sub out;
  for (int x = 0; x < C.size(); ++x)
    if (star_membership(C, {x}, A, B).member) out.push_back(x);
  return out;
}

Sub cat_T(const FinCat& C, const Obj& T) { return star_set(C, make_sub(T), make_sub(C.sigma(T))); }

Sub cbar_T(const FinCat& C, const Obj& T, const Obj& Tbar) {
  return star_set(C, make_sub(T), make_sub(C.sigma(Tbar)));
}

Sub cbar_T_alt(const FinCat& C, const Obj& Tbar, const Obj& Tprime) {
  return star_set(C, make_sub(Tbar), make_sub(C.sigma(Tprime)));
}

}  // namespace rmw
