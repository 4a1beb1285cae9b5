// The translation quiver ZA_n, the actions of tau and Sigma on it, orbit
// quotients ZA_n/<tau^a Sigma^b>, Hom hammocks, and the finite category of
// the orbit quotient built from them.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rmw/fincat.hpp"

namespace rmw {

// Vertex (p, i) of ZA_n, 1 <= i <= n.  Arrows (p,i)->(p,i+1) and
// (p,i)->(p+1,i-1); tau(p,i) = (p-1,i).
struct CoverVertex {
  int p = 0, i = 1;
  bool operator==(const CoverVertex& o) const { return p == o.p && i == o.i; }
  bool operator<(const CoverVertex& o) const { return p != o.p ? p < o.p : i < o.i; }
};

struct OrbitSpec {
  int n = 1;
  int a = 0;  // tau exponent
  int b = 0;  // Sigma exponent
  std::string str() const;
};

CoverVertex cover_tau(const CoverVertex& v, int k = 1);
CoverVertex cover_sigma(int n, const CoverVertex& v);
CoverVertex cover_sigma_inv(int n, const CoverVertex& v);
CoverVertex cover_serre(int n, const CoverVertex& v);  // tau Sigma
// The generator F = tau^a Sigma^b applied k times (k may be negative).
CoverVertex apply_F(const OrbitSpec& s, const CoverVertex& v, int k);
// Hammock: dim Hom(v, w) in D^b(A_n) (0 or 1).
int hom_dim_cover(int n, const CoverVertex& v, const CoverVertex& w);
// All vertices w with Hom(v, w) != 0.
std::vector<CoverVertex> hammock(int n, const CoverVertex& v);
// Mesh predecessors of w in ZA_n.
std::vector<CoverVertex> mesh_predecessors(int n, const CoverVertex& w);
// Knitting: dim Hom(v, -) by the mesh recursion, on the slices p..p+n.
std::vector<std::pair<CoverVertex, int>> knit_hom_from(int n, const CoverVertex& v);

// Minimal m >= 1 with F^m a pure translation tau^e; returns (m, e).
std::pair<int, int> translation_power(const OrbitSpec& s);

// Orbit quotient combinatorics.
class OrbitQuotient {
 public:
  explicit OrbitQuotient(const OrbitSpec& s);  // throws NonFreeAction
  const OrbitSpec& spec() const { return spec_; }
  int size() const { return static_cast<int>(reps_.size()); }
  const CoverVertex& rep(int x) const { return reps_[x]; }
  // (x, k) with v = F^k rep(x).
  std::pair<int, int> locate(const CoverVertex& v) const;
  int index(const CoverVertex& v) const { return locate(v).first; }
  // Degrees k with F^k rep(y) in the hammock of rep(x), ascending.
  std::vector<int> hom_degrees(int x, int y) const;
  // Arrows of the orbit translation quiver (with multiplicity).
  std::vector<std::vector<int>> mesh_arrows() const;

 private:
  CoverVertex normalize(const CoverVertex& v, int& j) const;
  OrbitSpec spec_;
  int m_ = 1, e_ = 0;
  std::vector<CoverVertex> reps_;
  std::vector<std::vector<int>> by_slot_;  // normalized (p,i) -> (index, k-offset)
};

// The orbit category as a FinCat: Hom(x,y) has basis {k : F^k rep(y) in
// H(rep(x))}; composition of degree-k and degree-k' basis maps is the
// degree-(k+k') basis map if that one exists and 0 otherwise.
FinCat build_mesh_category(const OrbitSpec& s);

std::string cover_name(const CoverVertex& v);

}  // namespace rmw
