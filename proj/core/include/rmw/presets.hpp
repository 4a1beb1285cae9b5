// Preset catalog: orbit categories ZA_n/<tau^a Sigma^b> shipped as data
// (orbit parameters, figure label maps in cover coordinates and, where one
// exists, a self-injective algebra realising the category as a stable
// module category), together with validation of a realising algebra against
// the combinatorial orbit quotient.
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rmw/algebra.hpp"
#include "rmw/fincat.hpp"
#include "rmw/mesh.hpp"
#include "rmw/stable.hpp"

namespace rmw {

// Directory holding the preset files.  Resolution order: the RMW_PRESET_DIR
// environment variable, the installed data directory, the source tree.
std::string preset_data_dir();

struct PresetInfo {
  std::string name, title;
  OrbitSpec spec;
  std::vector<std::pair<std::string, CoverVertex>> labels;  // file order
  std::optional<std::string> algebra_file;                   // absolute path
  std::string realisation_note;
};

std::vector<std::string> preset_names();
// Throws InputError("UnknownPreset") / InputError("ParseError").
PresetInfo load_preset_info(const std::string& name);

// A loaded preset: the orbit category (the ground model used by all
// computations) with figure labels attached to catalog objects.
class Preset {
 public:
  explicit Preset(PresetInfo info);
  const PresetInfo& info() const { return info_; }
  const std::string& name() const { return info_.name; }
  const OrbitQuotient& orbit() const { return orbit_; }
  const CategoryPtr& category() const { return cat_; }
  const FinCat& cat() const { return cat_->cat(); }

  // Resolves a figure label or cover coordinates "(p,i)"; throws
  // InputError("UnknownLabel").
  int resolve(const std::string& token) const;
  // Comma-separated list of labels / coordinates.
  Obj resolve_list(const std::string& csv) const;
  // Figure label of an object if it has one, else its cover coordinates.
  std::string label(int x) const;
  std::vector<std::string> labels() const;
  std::string obj_label(const Obj& X) const;
  bool has_label(int x) const { return by_id_.count(x) != 0; }

 private:
  PresetInfo info_;
  OrbitQuotient orbit_;
  CategoryPtr cat_;
  std::map<std::string, int> by_label_;
  std::map<int, std::string> by_id_;
};

std::shared_ptr<const Preset> load_preset(const std::string& name);

struct PresetValidation {
  bool pass = false;
  std::string mismatch;  // first disagreeing datum (empty on success)
  struct Step {
    std::string name;
    bool pass = false;
    std::string detail;
  };
  std::vector<Step> steps;
  int orbit_objects = 0, stable_objects = 0;
  // Catalog position (stable category) -> orbit object, when an isomorphism
  // was found.
  std::vector<int> iso;
  // Figure labels transported onto the stable catalog: label -> module name.
  std::vector<std::pair<std::string, std::string>> transported_labels;
};

// Checks of the orbit quotient alone: freeness, hammock Hom dimensions
// against mesh knitting, and the structural self-checks of the orbit
// category.
std::vector<PresetValidation::Step> validate_orbit_model(const OrbitSpec& spec);

// Translation-quiver isomorphism between the stable AR quiver of A (with
// Sigma- and tau-actions) and the orbit quotient, plus equality of all
// Hom-dimension tables; on success the labels are transported to the
// stable catalog.  A mismatch is reported (not thrown).
PresetValidation validate_preset(const AlgebraPtr& A, const OrbitSpec& spec,
                                 const std::vector<std::pair<std::string, CoverVertex>>& labels = {});
// Full validation of a shipped preset, including the orbit model checks and
// the requirement that a realising algebra is shipped.
PresetValidation validate_preset(const PresetInfo& info);

// Isomorphism of finite categories' combinatorial data: arrow matrices,
// Hom-dimension tables and the Sigma and tau permutations.
std::optional<std::vector<int>> translation_iso(const std::vector<std::vector<int>>& arrowsA,
                                                const std::vector<std::vector<int>>& homA,
                                                const std::vector<int>& sigmaA, const std::vector<int>& tauA,
                                                const std::vector<std::vector<int>>& arrowsB,
                                                const std::vector<std::vector<int>>& homB,
                                                const std::vector<int>& sigmaB, const std::vector<int>& tauB);

}  // namespace rmw
