// Finite-dimensional quiver algebras with homogeneous relations, their
// representations (modules), module maps, and the basic homological
// constructions over them.
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rmw/errors.hpp"
#include "rmw/linalg.hpp"

namespace rmw {

struct Arrow {
  std::string id;
  int src = 0;
  int tgt = 0;
};

// A path is a sequence of arrow indices, composed left to right (first arrow
// first).  Trivial paths are identified by their vertex.
struct Path {
  int src = 0;
  int tgt = 0;
  std::vector<int> arrows;
  int length() const { return static_cast<int>(arrows.size()); }
};

struct RelationTerm {
  Q coef;
  std::vector<int> path;  // arrow indices
};

struct Relation {
  std::vector<RelationTerm> terms;
};

class QuiverAlgebra {
 public:
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  std::vector<Relation> relations;

  int num_vertices() const { return static_cast<int>(vertices.size()); }
  int num_arrows() const { return static_cast<int>(arrows.size()); }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<Path>& basis() const { return basis_; }
  bool self_injective() const { return self_injective_; }

  // Coordinates (over basis()) of an arbitrary path given by arrow indices
  // starting at `src`.
  Vec reduce_path(int src, const std::vector<int>& arrows) const;
  // Product of two basis elements (concatenation b then c).
  const Vec& mult(int b, int c) const { return mult_[static_cast<size_t>(b) * dim() + c]; }
  // Indices of basis paths from u to v.
  const std::vector<int>& paths_between(int u, int v) const { return between_[u * num_vertices() + v]; }
  int arrow_index(const std::string& id) const;
  std::string path_name(int b) const;

  // Verifies associativity on all basis triples.
  bool check_associative() const;

  friend std::shared_ptr<QuiverAlgebra> build_algebra(std::vector<std::string>, std::vector<Arrow>,
                                                      std::vector<Relation>, int);

 private:
  std::vector<Path> basis_;
  std::vector<int> degree_start_;  // basis index where each degree starts
  // For degree d >= 1: map (index of degree-(d-1) basis element, arrow) ->
  // coordinates among degree-d basis elements (global indices).
  std::vector<std::map<std::pair<int, int>, std::vector<std::pair<int, Q>>>> extend_;
  std::vector<Vec> mult_;
  std::vector<std::vector<int>> between_;
  bool self_injective_ = false;

  std::vector<std::pair<int, Q>> append_arrow(const std::vector<std::pair<int, Q>>& v, int arrow) const;
  void compute_self_injective();
};

using AlgebraPtr = std::shared_ptr<const QuiverAlgebra>;

// Builds the algebra kQ/(relations).  Relations must be homogeneous
// (all terms of equal length >= 2).  Throws Error("InfiniteDimensional") if
// the quotient does not vanish in degrees <= max_length.
std::shared_ptr<QuiverAlgebra> build_algebra(std::vector<std::string> vertices, std::vector<Arrow> arrows,
                                             std::vector<Relation> relations, int max_length = 64);

// JSON algebra description: {vertices:[..], arrows:[{id,src,tgt}..],
// relations:[{terms:[{coef:"p/q", path:[arrow ids]}..]}..]}.
std::shared_ptr<QuiverAlgebra> algebra_from_json_text(const std::string& text);
std::shared_ptr<QuiverAlgebra> load_algebra(const std::string& path);
std::string algebra_to_json_text(const QuiverAlgebra& A);

// Convenience constructors used by tests and presets.
std::shared_ptr<QuiverAlgebra> nakayama_cyclic(int vertices, int loewy_length);
std::shared_ptr<QuiverAlgebra> linear_path_algebra(int n);  // arrows i+1 -> i
std::shared_ptr<QuiverAlgebra> truncated_loop(int power);    // k[x]/(x^power)

// ---------------------------------------------------------------------------
// Modules

struct Module {
  AlgebraPtr alg;
  std::vector<int> dim;    // per vertex
  std::vector<Mat> act;    // per arrow: dim[tgt] x dim[src]

  int total_dim() const;
  bool is_zero() const { return total_dim() == 0; }
  // Matrix of the action of a path (arrow indices, first arrow first).
  Mat path_action(int src, const std::vector<int>& arrows) const;
  // Checks that every relation acts as zero.
  bool satisfies_relations() const;
  std::string dim_vector() const;
};

struct ModuleMap {
  std::vector<Mat> m;  // per vertex: dim target x dim source
};

Module zero_module(AlgebraPtr A);
Module projective_module(AlgebraPtr A, int v);
Module injective_module(AlgebraPtr A, int v);
Module simple_module(AlgebraPtr A, int v);
Module regular_module(AlgebraPtr A);
// Module from explicit data (validated).
Module make_module(AlgebraPtr A, std::vector<int> dim, std::vector<Mat> act);

ModuleMap zero_map(const Module& M, const Module& N);
ModuleMap identity_map(const Module& M);
ModuleMap compose(const ModuleMap& g, const ModuleMap& f);
ModuleMap add_maps(const ModuleMap& a, const ModuleMap& b);
ModuleMap scale_map(const Q& s, const ModuleMap& a);
bool is_module_map(const Module& M, const Module& N, const ModuleMap& f);
bool map_is_zero(const ModuleMap& f);
bool map_is_injective(const ModuleMap& f);
bool map_is_surjective(const ModuleMap& f);
bool map_is_iso(const ModuleMap& f);
std::optional<ModuleMap> map_inverse(const ModuleMap& f);

// Flattening of a map between fixed modules into a coordinate vector.
Vec flatten(const Module& M, const Module& N, const ModuleMap& f);
ModuleMap unflatten(const Module& M, const Module& N, const Vec& v);
int flat_size(const Module& M, const Module& N);

// Basis of Hom(M, N) as flattened columns.
Mat hom_basis(const Module& M, const Module& N);
std::vector<ModuleMap> hom_modules(const Module& M, const Module& N);

struct DirectSum {
  Module sum;
  std::vector<ModuleMap> incl;  // summand -> sum
  std::vector<ModuleMap> proj;  // sum -> summand
};
DirectSum direct_sum(AlgebraPtr A, const std::vector<Module>& parts);

struct SubModule {
  Module sub;
  ModuleMap incl;
};
struct QuotModule {
  Module quot;
  ModuleMap proj;
};
SubModule kernel(const Module& M, const Module& N, const ModuleMap& f);
QuotModule cokernel(const Module& M, const Module& N, const ModuleMap& f);
SubModule image(const Module& M, const Module& N, const ModuleMap& f);

// Top and socle: per vertex, basis (columns) of a complement of rad M_v,
// respectively of soc M_v.
std::vector<Mat> top_basis(const Module& M);
std::vector<Mat> socle_basis(const Module& M);

struct Cover {
  Module P;
  ModuleMap map;  // P -> M (epi) for projective cover, M -> I (mono) for hull
};
Cover proj_cover(const Module& M);
Cover inj_hull(const Module& M);
Module syzygy(const Module& M);
Module cosyzygy(const Module& M);
Module nakayama(const Module& M);

// Radical of End(M) as flattened columns (trace-form criterion).
Mat end_radical(const Module& M, const Mat& end_basis);

struct Summand {
  Module mod;
  ModuleMap incl;  // mod -> M
  ModuleMap proj;  // M -> mod
};
// Krull-Schmidt decomposition.  The maps satisfy sum incl_i proj_i = id and
// proj_i incl_j = delta_ij id.  Throws Error("NonSplitField") if a splitting
// cannot be found over the rationals.
std::vector<Summand> decompose(const Module& M);

struct IsoClass {
  Module rep;
  int multiplicity = 0;
};
std::vector<IsoClass> decompose_classes(const Module& M);

// Isomorphism of indecomposable modules (exact certificate).
std::optional<ModuleMap> find_iso(const Module& M, const Module& N);
bool is_indecomposable(const Module& M);
bool is_projective_indec(const Module& M);
// Removes projective summands.
Module strip_projectives(const Module& M);

}  // namespace rmw
