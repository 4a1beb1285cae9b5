// Independent oracles used to freeze expected values.  Nothing here uses
// the library: derived-category Homs come from interval modules of the
// linearly oriented A_n quiver and the Euler form, and rigid objects of
// cluster categories from non-crossing diagonals of a polygon.
#pragma once

#include <vector>

namespace rmw_oracle {

// Indecomposable object M[s] of D^b(mod kA_n): M is the interval module with
// support [a, b] for the orientation with arrows j+1 -> j (so the
// projectives are [1, i] and the injectives [i, n]).
struct DObj {
  int a = 1, b = 1, s = 0;
  bool operator==(const DObj& o) const { return a == o.a && b == o.b && s == o.s; }
};

DObj d_tau(int n, const DObj& x);
DObj d_tau_inv(int n, const DObj& x);
DObj d_shift(const DObj& x, int k);
// The object at cover vertex (p, i) of ZA_n: (0, i) is the projective [1, i]
// and (p, i) = tau^{-p} (0, i).
DObj d_from_cover(int n, int p, int i);
// dim Hom(x, y) in D^b(mod kA_n): Hom of modules in equal degree, Ext^1
// (from the Euler form) in degree one apart.
int d_hom(int n, const DObj& x, const DObj& y);
// dim Hom in the orbit category D^b/<tau^a Sigma^b> between cover vertices:
// the sum over k of dim Hom(x, F^k y).
int orbit_hom(int n, int a, int b, int p1, int i1, int p2, int i2);
// Number of indecomposables of ZA_n/<tau^a Sigma^b> (free action assumed):
// F^2 = tau^{2a - b(n+1)}.
int orbit_object_count(int n, int a, int b);

struct NonCrossing {
  std::vector<long> by_size;  // number of compatible sets with k diagonals
  long total = 0;             // all compatible sets, including the empty one
  long triangulations = 0;    // maximal ones
};
// Sets of pairwise non-crossing diagonals of a convex polygon; for the
// (n+3)-gon these are the basic rigid objects of the cluster category of
// A_n, the triangulations being the cluster-tilting ones.
NonCrossing noncrossing_diagonals(int polygon);

// Non-projective indecomposables of a self-injective Nakayama algebra with
// `vertices` simples and Loewy length `loewy`: uniserials of length
// 1..loewy-1 with each top.
int nakayama_stable_count(int vertices, int loewy);

}  // namespace rmw_oracle
