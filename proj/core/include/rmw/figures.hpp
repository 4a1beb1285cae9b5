// Reproduction of the worked examples: each figure is a configuration
// (preset, T, R, components) read from figures.json in the preset
// directory; the components compute the combinatorial content (quivers,
// encircled sets, deletions, quotient categories) and the associated
// verifications.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rmw/presets.hpp"
#include "rmw/suites.hpp"

namespace rmw {

struct QuiverPicture {
  std::string name;
  std::vector<std::string> labels;
  std::vector<std::vector<int>> arrows;
  std::vector<bool> marked;                // encircled vertices (may be empty)
  std::vector<std::vector<int>> hom_dims;  // empty when not a category
  std::string dot() const;
};

// A vertex bijection between two pictures, by label.
struct Certificate {
  std::string name, from, to;
  std::vector<std::pair<std::string, std::string>> map;
};

struct FigureResult {
  std::string id, title, preset;
  std::string T, R;  // labels
  std::vector<QuiverPicture> quivers;
  std::vector<Certificate> certificates;
  std::vector<Check> checks;
  // Named labelled object lists (e.g. "Cbar(T)", "T'", "B").
  std::vector<std::pair<std::string, std::vector<std::string>>> sets;
  bool pass() const;
};

struct FigureSpec {
  std::string id, title, preset, T, R;
  std::vector<std::string> components;
};
std::vector<FigureSpec> figure_specs();
// Throws InputError("UnknownFigure").
FigureSpec figure_spec(const std::string& id);

FigureResult reproduce_figure(const FigureSpec& spec);
FigureResult reproduce_figure(const std::string& id);

// Components, usable on their own.
void figure_cbar(const Preset& P, const Obj& T, const Obj& R, FigureResult& out);
void figure_main_equivalence(const Preset& P, const Obj& T, const Obj& R, FigureResult& out);
void figure_quotients(const Preset& P, const Obj& T, const Obj& R, FigureResult& out);
void figure_deletions(const Preset& P, const Obj& T, const Obj& R, FigureResult& out);
void figure_nearly_morita(const Preset& P, const Obj& T, const Obj& R, FigureResult& out);
void figure_module_models(const Preset& P, const Obj& T, const Obj& R, FigureResult& out);
void figure_localisation(const Preset& P, const Obj& T, const Obj& R, FigureResult& out);

// Picture of a presented quotient category with preset labels.
QuiverPicture quotient_picture(const Preset& P, const std::string& name, const Quotient& Q);
// Picture of the full preset AR quiver with `marked` encircled.
QuiverPicture ar_picture(const Preset& P, const std::string& name, const Sub& marked);
// Certificate from a vertex bijection between two pictures.
Certificate make_certificate(const std::string& name, const QuiverPicture& a, const QuiverPicture& b,
                             const std::vector<int>& map);

}  // namespace rmw
