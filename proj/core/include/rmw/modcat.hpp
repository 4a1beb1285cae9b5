// The module-category side: Lambda = End(T)^op, its modules realised as
// representations of add T (C(T,X) with the precomposition action), the
// model C(T)/(Sigma T) of mod Lambda, the exact subcategories E and E', the
// subcategory B, the objects Q_m and S_m, the localisation classes and the
// verification of the localisation theorems on finite models.
//
// Localisations are never built as categories of fractions: each one is
// represented by the finite model that the corresponding theorem provides,
// and the theorem is checked as an equivalence of presented categories.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rmw/fincat.hpp"
#include "rmw/rigid.hpp"
#include "rmw/subcat.hpp"
#include "rmw/triangle.hpp"

namespace rmw {

// A right module over the full subcategory add T, i.e. a contravariant
// functor: a space V(j) for every summand T_j and, for every basis element
// a of C(T_i, T_k), a linear map V(k) -> V(i).
struct RepModule {
  std::vector<int> dims;
  std::vector<std::vector<Mat>> act;  // act[i*m+k][a]
  int total_dim() const;
};
// A module homomorphism: one matrix per summand.
using RepMap = std::vector<Mat>;

class TModules {
 public:
  TModules(const LinCat& C, Obj T);
  const Obj& T() const { return T_; }
  int size() const { return static_cast<int>(T_.size()); }

  RepModule of(const Obj& X) const;          // C(T, X)
  RepMap induced(const Morph& f) const;      // C(T, f)
  RepModule projective(int j) const { return of({T_[j]}); }
  RepModule simple(int j) const;
  std::vector<RepMap> hom_basis(const RepModule& M, const RepModule& N) const;
  int hom_dim(const RepModule& M, const RepModule& N) const { return static_cast<int>(hom_basis(M, N).size()); }
  bool is_hom(const RepModule& M, const RepModule& N, const RepMap& f) const;
  // dim Hom(M, S_j), the multiplicity of S_j in the top of M.
  int top_dim(const RepModule& M, int j) const;
  // dim Ext^1(M, S_j), computed from a projective presentation.
  int ext1_simple(const RepModule& M, int j) const;
  // Kernel of a homomorphism as a module with its inclusion.
  std::pair<RepModule, RepMap> kernel(const RepModule& M, const RepMap& f) const;
  // Submodule spanned by the given subspaces (which must be closed).
  RepModule submodule(const RepModule& M, const std::vector<Mat>& basis) const;
  RepMap compose(const RepMap& g, const RepMap& f) const;
  bool is_surjective(const RepModule& N, const RepMap& f) const;
  bool is_injective(const RepModule& M, const RepMap& f) const;

 private:
  const LinCat* C_;
  Obj T_;
};

// Gabriel quiver of add X: arrow multiplicities dim rad/rad^2 between the
// summands of X (the quiver of End(X)^op up to orientation convention).
std::vector<std::vector<int>> endo_quiver(const LinCat& C, const Obj& X);

// mod Lambda modelled by C(T)/(Sigma T).
struct ModModel {
  Obj T;
  Sub cT;            // C(T)
  Sub objects;       // catalog ids of the indecomposable model objects
  Quotient model;    // C(T)/(Sigma T)
  std::vector<int> projective_of;  // T position -> model position
  std::vector<int> simple_of;      // T position -> model position of S_j
  std::vector<std::vector<int>> dim_vectors;  // per model object
};
ModModel mod_model(const FinCat& C, const Obj& T);

// Context for one mutation (T, R): Lambda-modules, the model, E, B, Q_m,
// classification of morphisms and the constructive lemmas.
class LocContext {
 public:
  LocContext(const FinCat& C, const Obj& T, const Obj& R);
  const FinCat& cat() const { return C_; }
  const Mutation& mutation() const { return mut_; }
  const ModModel& model() const { return model_; }
  const TModules& modules() const { return mods_; }
  const Sub& cbar() const { return cbar_; }
  // E via its definition (Ext^1(M, S_j) = 0 for the summands of R).
  const Sub& E_definition() const { return E_def_; }
  // E as the image of Cbar(T).
  const Sub& E_image() const { return E_img_; }
  // B: model objects in C(T) intersected with Tbar^perp.
  const Sub& B() const { return B_; }
  // Q = C(T, Sigma R*) as a list of model objects (catalog ids).
  const Obj& Q() const { return Q_; }
  const std::vector<RepModule>& model_modules() const { return model_mods_; }

  // Multiplicities of the model indecomposables in a Lambda-module.
  std::optional<std::vector<int>> decompose_module(const RepModule& K) const;
  bool module_in_add(const RepModule& K, const Sub& set) const;

  struct Class {
    bool S = false, Stilde = false, epi = false, SB0 = false;
    Obj Z;  // cocone
  };
  Class classify(const Morph& s) const;

  struct InverseResult {
    bool ok = false;
    std::string failure;
    Obj Ubar;
    Morph c, a, d;  // Sigma Ubar -> Y, Y -> Sigma Ubar, Y -> X
  };
  // Constructs the data of the inverse lemma for s in S-tilde between
  // Cbar(T)-objects and certifies its three conclusions.
  InverseResult lemma_inverse(const Morph& s) const;

  // Whether the model image of f factors through add B (computed in C via
  // the ideal generated by B and Sigma T).
  bool model_factors_through_B(const Morph& f) const;

 private:
  const FinCat& C_;
  Mutation mut_;
  ModModel model_;
  TModules mods_;
  Sub cbar_, E_def_, E_img_, B_;
  Obj Q_;
  std::vector<RepModule> model_mods_;
  Mat H_;  // dim Hom(M_W, M_V) over model indecomposables
};

struct FbarReport {
  bool pass = false;
  std::vector<std::string> failures;
  Sub E, E_def, Q, B;
  Sub quotient_objects;                    // E minus add Q
  std::vector<std::vector<int>> hom_dims;  // of E/add Q computed with modules
  Quotient cbar_quotient;                  // Cbar(T)/(Sigma T')
  std::vector<std::vector<int>> quiver;    // of E/add Q
};
// Theorem F-bar and its corollary on one side: C(T,-) induces an
// equivalence Cbar(T)/(Sigma T') -> E/add C(T, Sigma R*) (the model of the
// localisation at S_{B,0}); Hom spaces in E/add Q are computed directly
// from Lambda-modules.
FbarReport verify_fbar_side(const FinCat& C, const Obj& T, const Obj& R);

struct TheoremFbarReport {
  bool pass = false;
  std::vector<std::string> failures;
  FbarReport primal, dual;  // dual computed in the opposite category
  std::optional<std::vector<int>> certificate;  // quiver iso E/Q vs E'/Q'
};
TheoremFbarReport verify_theorem_fbar(const FinCat& C, const Obj& T, const Obj& R);

struct LocalisationReport {
  bool pass = false;
  std::vector<std::string> failures;
  int morphisms_tested = 0;
  int s_count = 0, stilde_count = 0, sb0_count = 0;
  int inverse_constructed = 0;
  int z_in_cT_triangles = 0;
  int b_iff_xt_checked = 0;
  int sb0_lifted = 0;
  int stilde_not_s = 0;
};
// Desk-scale evidence for C_S = C_S-tilde: S within S-tilde, the inverse
// lemma on every S-tilde morphism between Cbar(T)-objects, C(T, S-tilde) =
// S_{B,0} in both directions, "B iff X_T" and "Z in C(T)".
LocalisationReport verify_more_localisations(const FinCat& C, const Obj& T, const Obj& R, int random_per_pair = 2);

// Sample of morphisms between indecomposables: basis maps and a few random
// combinations per pair (deterministic).
std::vector<Morph> sample_morphisms(const LinCat& C, const Sub& src, const Sub& tgt, int random_per_pair, uint64_t seed);

}  // namespace rmw
