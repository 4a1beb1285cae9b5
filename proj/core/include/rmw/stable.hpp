// The stable module category of a self-injective quiver algebra as a finite
// category: a catalog of the non-projective indecomposables (found by
// knitting Auslander-Reiten sequences), stable Hom spaces with composition
// tables, the suspension Omega^{-1} on objects and morphisms, tau = Omega^2 nu,
// the Serre functor tau Sigma with its trace functional, and triangles via
// the injective-hull pushout.
#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rmw/algebra.hpp"
#include "rmw/fincat.hpp"

namespace rmw {

struct ARSequence {
  Module tauX, E;
  ModuleMap f, g;  // tauX -> E -> X
};
// The almost split sequence ending in the non-projective indecomposable X.
ARSequence ar_sequence(const Module& X);

class StableCategory {
 public:
  // Builds the catalog and all structure; throws NotSelfInjective, or
  // Error("CatalogTooLarge") beyond max_objects indecomposables.
  explicit StableCategory(AlgebraPtr A, int max_objects = 400);

  const QuiverAlgebra& algebra() const { return *A_; }
  AlgebraPtr algebra_ptr() const { return A_; }
  int size() const { return static_cast<int>(mods_.size()); }
  const Module& module(int x) const { return mods_[x]; }
  const std::vector<Module>& modules() const { return mods_; }
  // The finite category (catalog + stable Homs + Sigma + Serre data).
  const CategoryPtr& category() const { return cat_; }
  const FinCat& cat() const { return cat_->cat(); }
  // Stable AR quiver: arrow multiplicities between catalog objects.
  const std::vector<std::vector<int>>& ar_arrows() const { return arrows_; }

  // Catalog position of a module isomorphic to M (indecomposable,
  // non-projective), or -1.
  int find(const Module& M) const;
  // Catalog decomposition of a module after discarding projective summands.
  Obj decompose_stable(const Module& M) const;

  // A module-level representative of the stable basis map b in Hom(x, y).
  ModuleMap representative(int x, int y, int b) const { return basis_[idx(x, y)][b]; }
  ModuleMap representative(int x, int y, const Vec& coords) const;
  // Stable coordinates of a module map Mx -> My.
  Vec reduce(int x, int y, const ModuleMap& f) const;
  // A map Mx -> My factoring through a projective (random element of that
  // subspace; zero if there is none).
  ModuleMap random_projective_map(int x, int y, Rng& rng) const;

  // Cone of a module map f: Mx -> My computed by the pushout along the
  // injective hull of Mx; returns the catalog decomposition.
  Obj cone_pushout(int x, int y, const ModuleMap& f) const;

 private:
  size_t idx(int x, int y) const { return static_cast<size_t>(x) * mods_.size() + y; }
  AlgebraPtr A_;
  std::vector<Module> mods_;
  std::vector<std::vector<int>> arrows_;
  std::vector<std::vector<ModuleMap>> basis_;  // stable basis representatives
  std::vector<Mat> reducer_;                   // [PH | B] for coordinates
  std::vector<int> ph_cols_;                   // number of PH columns
  std::vector<Mat> ph_;                        // flattened maps through projectives
  CategoryPtr cat_;
};

// Preprojective algebra of type A_n (quiver with arrows in both directions
// and the mesh relations).
std::shared_ptr<QuiverAlgebra> preprojective_A(int n);

}  // namespace rmw
