// Finite Krull-Schmidt k-linear categories given by a catalog of
// indecomposable objects, Hom-space bases and composition tables, optionally
// equipped with a suspension, an Auslander-Reiten translation and a Serre
// functor with trace functionals.
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rmw/errors.hpp"
#include "rmw/linalg.hpp"

namespace rmw {

// A finite k-linear category: finitely many objects, finite-dimensional Hom
// spaces with fixed bases and explicit composition tables.  Used both for
// catalogs of indecomposables and as the presentation format of quotient
// categories and module-category models.
class LinCat {
 public:
  LinCat() = default;
  explicit LinCat(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int x) const { return names_[x]; }
  const std::vector<std::string>& names() const { return names_; }
  int index_of(const std::string& name) const;  // -1 if absent
  void rename(int x, std::string name) { names_[x] = std::move(name); }

  int dim(int x, int y) const { return dims_[idx2(x, y)]; }
  void set_dim(int x, int y, int d);
  // Composition table for x -> y -> z: a (dim(x,z)) x (dim(x,y)*dim(y,z))
  // matrix whose column a*dim(y,z)+b holds the coordinates of b o a.
  const Mat& table(int x, int y, int z) const { return tables_[idx3(x, y, z)]; }
  void set_table(int x, int y, int z, Mat m) { tables_[idx3(x, y, z)] = std::move(m); }
  // b o a for a in Hom(x,y), b in Hom(y,z).
  Vec compose(int x, int y, int z, const Vec& a, const Vec& b) const;
  const Vec& id(int x) const { return ids_[x]; }
  void set_id(int x, Vec v) { ids_[x] = std::move(v); }

  // Computes radical data; must be called after the tables are filled.
  void finalize();
  // Basis (columns) of rad(x,y): everything for x != y, the nilpotent
  // endomorphisms for x == y.
  const Mat& rad(int x, int y) const;
  // The augmentation End(x) -> End(x)/rad = k, with value 1 on the identity.
  const Vec& augmentation(int x) const { return aug_[x]; }
  // Basis (columns) of rad^2(x,y) = sum over z of rad(z,y) o rad(x,z).
  Mat rad2(int x, int y) const;

  // Checks identities and associativity on all basis triples; returns an
  // empty string on success or a description of the first failure.
  std::string check_axioms() const;

 protected:
  size_t idx2(int x, int y) const { return static_cast<size_t>(x) * names_.size() + y; }
  size_t idx3(int x, int y, int z) const { return (static_cast<size_t>(x) * names_.size() + y) * names_.size() + z; }

  std::vector<std::string> names_;
  std::vector<int> dims_;
  std::vector<Mat> tables_;
  std::vector<Vec> ids_;
  std::vector<Mat> rad_endo_;
  std::vector<Vec> aug_;
  mutable std::vector<Mat> full_;  // identity matrices for rad(x,y), x != y
};

// An object is a list of indecomposables (repetitions allowed).
using Obj = std::vector<int>;

// A morphism between direct sums: block (j,i) lies in Hom(src[i], tgt[j]).
struct Morph {
  Obj src, tgt;
  std::vector<Vec> blk;
  Vec& at(int j, int i) { return blk[static_cast<size_t>(j) * src.size() + i]; }
  const Vec& at(int j, int i) const { return blk[static_cast<size_t>(j) * src.size() + i]; }
};

int hom_dim(const LinCat& C, const Obj& X, const Obj& Y);
Morph zero_morph(const LinCat& C, const Obj& X, const Obj& Y);
Morph id_morph(const LinCat& C, const Obj& X);
Morph compose(const LinCat& C, const Morph& g, const Morph& f);  // g o f
Morph add(const Morph& f, const Morph& g);
Morph sub(const Morph& f, const Morph& g);
Morph scale(const Q& s, const Morph& f);
bool is_zero(const Morph& f);
Vec flat(const Morph& f);
Morph unflat(const LinCat& C, const Obj& X, const Obj& Y, const Vec& v);
// Matrix of u |-> g o u : Hom(W, g.src) -> Hom(W, g.tgt).
Mat post_mat(const LinCat& C, const Morph& g, const Obj& W);
// Matrix of v |-> v o f : Hom(f.tgt, W) -> Hom(f.src, W).
Mat pre_mat(const LinCat& C, const Morph& f, const Obj& W);
// Concatenation of objects and block morphisms.
Obj concat(const Obj& a, const Obj& b);
Morph hstack(const LinCat& C, const Morph& a, const Morph& b);  // [a b]: A1+A2 -> Y
Morph vstack(const LinCat& C, const Morph& a, const Morph& b);  // [a; b]: X -> Y1+Y2
// Restriction to sub-lists of source / target positions.
Morph restrict(const Morph& f, const std::vector<int>& tgt_pos, const std::vector<int>& src_pos);
// Inclusion of / projection onto the positions `pos` of X.
Morph inclusion(const LinCat& C, const Obj& X, const std::vector<int>& pos);
Morph projection(const LinCat& C, const Obj& X, const std::vector<int>& pos);
// Basis of Hom(X,Y) (unit coordinate vectors) as a flattened identity.
std::vector<Morph> hom_basis(const LinCat& C, const Obj& X, const Obj& Y);
// Isomorphism test for a morphism between direct sums of indecomposables:
// invertible modulo the radical.
bool is_iso(const LinCat& C, const Morph& f);
// Multiset utilities.
Obj sorted(Obj X);
bool same_multiset(const Obj& a, const Obj& b);
std::string obj_str(const LinCat& C, const Obj& X);

// A finite triangulated-type category: a catalog with suspension, AR
// translation and Serre functor.  The trace functional tr_x on Hom(x, Sx)
// makes the pairing Hom(x,y) x Hom(y,Sx) -> k, (a,b) |-> tr_x(b o a) perfect.
class FinCat : public LinCat {
 public:
  FinCat() = default;
  explicit FinCat(std::vector<std::string> names);

  int sigma(int x) const { return sigma_[x]; }
  int sigma_inv(int x) const { return sigma_inv_[x]; }
  int tau(int x) const { return tau_[x]; }
  int tau_inv(int x) const { return tau_inv_[x]; }
  int serre(int x) const { return serre_[x]; }
  int serre_inv(int x) const { return serre_inv_[x]; }
  // Matrix Hom(x,y) -> Hom(Sigma x, Sigma y) (resp. Sigma^{-1}).
  const Mat& sigma_mor(int x, int y) const { return sigma_mor_[idx2(x, y)]; }
  const Mat& sigma_inv_mor(int x, int y) const { return sigma_inv_mor_[idx2(x, y)]; }
  const Vec& trace(int x) const { return trace_[x]; }

  void set_sigma(std::vector<int> s);  // also sets the inverse
  void set_tau(std::vector<int> t);
  void set_serre(std::vector<int> s);
  void set_sigma_mor(int x, int y, Mat m) { sigma_mor_[idx2(x, y)] = std::move(m); }
  void set_sigma_inv_mor(int x, int y, Mat m) { sigma_inv_mor_[idx2(x, y)] = std::move(m); }
  void set_trace(int x, Vec t) { trace_[x] = std::move(t); }

  // Completes the structure: radical data and socle elements.
  void finalize_all();
  // The element of Hom(S^{-1}v, v) dual to the augmentation of End(v).
  const Vec& socle_element(int v) const { return socle_[v]; }

  const FinCat& op() const { return *op_; }
  bool has_op() const { return op_ != nullptr; }

  Obj sigma(const Obj& X) const;
  Obj sigma_inv(const Obj& X) const;
  Obj tau(const Obj& X) const;
  Obj serre(const Obj& X) const;
  Morph sigma(const Morph& f) const;
  Morph sigma_inv(const Morph& f) const;

  // Structural self-checks; each returns "" on success.
  std::string check_sigma_functor() const;
  std::string check_serre_pairing() const;
  std::string check_serre_is_tau_sigma() const;
  std::string check_serre_dimensions() const;

  // Optional metadata: cover coordinates and a preset name.
  std::vector<std::pair<int, int>> coords;
  std::string label;

 private:
  friend class Category;
  std::vector<int> sigma_, sigma_inv_, tau_, tau_inv_, serre_, serre_inv_;
  std::vector<Mat> sigma_mor_, sigma_inv_mor_;
  std::vector<Vec> trace_;
  std::vector<Vec> socle_;
  const FinCat* op_ = nullptr;
};

// A category together with its opposite; the two point at each other.
class Category {
 public:
  explicit Category(FinCat base);
  Category(const Category&) = delete;
  Category& operator=(const Category&) = delete;
  const FinCat& cat() const { return C_; }
  const FinCat& op() const { return Cop_; }

 private:
  FinCat C_, Cop_;
};
using CategoryPtr = std::shared_ptr<const Category>;
CategoryPtr make_category(FinCat base);

// The opposite category of C with Sigma^{-1}, tau^{-1}, S^{-1}.
FinCat build_opposite(const FinCat& C);
// Morphism in C viewed in C^op (same blocks, transposed layout) and back.
Morph to_op(const Morph& f);

// ---------------------------------------------------------------------------
// Ideal quotients and presented categories

struct Quotient {
  LinCat P;                  // the presented quotient category
  std::vector<int> objects;  // catalog id of each object of P
  // For each ordered pair (i,j) of P-objects: proj maps Hom_C -> Hom_P,
  // lift maps Hom_P -> Hom_C (a section of proj).
  std::vector<Mat> proj, lift;
  int pos(int catalog_id) const;  // -1 if not an object of P
  const Mat& proj_of(int i, int j) const { return proj[static_cast<size_t>(i) * objects.size() + j]; }
  const Mat& lift_of(int i, int j) const { return lift[static_cast<size_t>(i) * objects.size() + j]; }
};

// Basis (columns) of the ideal (I)(x,y) of maps factoring through add I.
Mat ideal_space(const LinCat& C, int x, int y, const std::vector<int>& I);
// Quotient of the full subcategory on `objects` by the ideal (I); objects in
// I (which become zero) are dropped.
Quotient quotient_category(const LinCat& C, const std::vector<int>& objects, const std::vector<int>& I);
// Full subcategory (no ideal).
Quotient full_subcategory(const LinCat& C, const std::vector<int>& objects);

// Arrow multiplicities dim rad(x,y)/rad^2(x,y) of a presented category.
std::vector<std::vector<int>> quiver_of(const LinCat& P);
// Isomorphism of quivers (and optionally of Hom-dimension tables), by
// degree pruning and backtracking.  Returns the vertex bijection.
std::optional<std::vector<int>> quiver_iso(const std::vector<std::vector<int>>& A,
                                           const std::vector<std::vector<int>>& B,
                                           const std::vector<std::vector<int>>* homA = nullptr,
                                           const std::vector<std::vector<int>>* homB = nullptr);
std::vector<std::vector<int>> hom_dims(const LinCat& P);

// DOT rendering of a quiver; `marked` vertices are drawn encircled.
std::string quiver_dot(const std::string& name, const std::vector<std::string>& labels,
                       const std::vector<std::vector<int>>& arrows, const std::vector<bool>& marked = {});

}  // namespace rmw
