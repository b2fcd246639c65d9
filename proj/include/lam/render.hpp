#pragma once

#include "lam/lamination.hpp"

#include <string>
#include <vector>

namespace lam {

struct RenderSpec {
  int width = 600;
  int height = 600;
  double leaf_stroke = 0.8;
  double circle_stroke = 1.2;
  double highlight_stroke = 2.0;
  std::vector<std::string> palette{"#1f3b73", "#d9e4f5", "#c0392b", "#000000"};
  bool fill_gaps = true;
  bool label_angles = false;
  std::vector<Chord> highlight;
};

std::string render(const Lamination& L, const RenderSpec& spec = {});
std::string render(const LamSet& g, const RenderSpec& spec = {});
std::string render(const GapGen& g, const RenderSpec& spec = {});

// SVG path data for the geodesic joining two angles (no leading "M").
std::string geodesic_path(const Angle& a, const Angle& b, const RenderSpec& spec);

}  // namespace lam
