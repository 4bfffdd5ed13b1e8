#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "nistab/types.hpp"

namespace nistab {

struct GridOptions {
  double lo = 1e-4;
  double hi = 1e4;
  int base_points = 400;       // doubled when a delay is present
  int refine_levels = 3;       // bisection passes driven by the sample fn
  double puncture_rel = 1e-3;  // relative exclusion radius at axis poles
  bool delay_present = false;
};

struct RefinementNote {
  double lo = 0;
  double hi = 0;
  std::string reason;
};

struct FrequencyGrid {
  std::vector<double> points;  // ascending, outside all punctured zones
  std::vector<std::pair<double, double>> punctured;  // open exclusion zones
  std::vector<RefinementNote> refinement_log;
  GridOptions options;

  bool excluded(double omega) const;
};

// Log-spaced base grid, punctured around each axis-pole frequency by the
// relative radius: the open interval (omega0*(1-r), omega0*(1+r)) is removed
// and its edge points inserted.
FrequencyGrid make_base_grid(const GridOptions& options,
                             const std::vector<double>& axis_pole_omegas);

// Up to options.refine_levels bisection passes: an interval is split at its
// geometric midpoint when the sampled values change sign or jump by more than
// half the local magnitude. New points respect the punctured zones.
void refine_grid(FrequencyGrid& grid,
                 const std::function<double(double)>& sample);

}
