#pragma once

// SVG rendering of fans and polyhedral complexes in R^n / R(1,...,1), n <= 4.

#include <string>
#include <vector>

#include "trophyp/json_io.hpp"

namespace trophyp {

struct PlotCell {
  std::vector<RationalVector> vertices;  // at least one
  std::vector<RationalVector> rays;
  int dim = 0;  // in R^n, counting the lineality line
};

struct PlotInput {
  int n = 0;
  std::vector<PlotCell> cells;
};

/// "bases" selects the fine Bergman fan of a matroid, "rays" a curve fan,
/// "cells" explicit {"vertices", "rays"} cells.
PlotInput plot_input_from_json(const Json& j);

/// Deterministic SVG, one <polygon class="cell"> per cell. Throws InputError unless 2 <= n <= 4.
std::string render_svg(const PlotInput& in);

}  // namespace trophyp
