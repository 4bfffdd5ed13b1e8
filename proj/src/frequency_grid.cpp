#include "nistab/frequency_grid.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "nistab/errors.hpp"
#include "nistab/parallel.hpp"

namespace nistab {

bool FrequencyGrid::excluded(double omega) const {
  for (const auto& [lo, hi] : punctured)
    if (omega > lo && omega < hi) return true;
  return false;
}

FrequencyGrid make_base_grid(const GridOptions& options,
                             const std::vector<double>& axis_pole_omegas) {
  if (!(options.lo > 0) || !(options.hi > options.lo))
    throw SchemaError("frequency grid requires 0 < lo < hi");
  if (options.base_points < 2)
    throw SchemaError("frequency grid requires at least two points");

  FrequencyGrid grid;
  grid.options = options;

  const double r = options.puncture_rel;
  for (double w0 : axis_pole_omegas) {
    if (!(w0 > 0)) continue;
    // Keep the zone edges clear of the pole-proximity evaluation guard,
    // which matters for poles well below omega = 1.
    const double radius = std::max(r * w0, 2e-6 * (1.0 + w0));
    grid.punctured.emplace_back(w0 - radius, w0 + radius);
  }
  std::sort(grid.punctured.begin(), grid.punctured.end());

  const int n =
      options.delay_present ? 2 * options.base_points : options.base_points;
  const double llo = std::log(options.lo);
  const double lhi = std::log(options.hi);

  std::set<double> pts;
  for (int k = 0; k < n; ++k) {
    // The exp/log round trip can overshoot the range ends by an ulp; the
    // endpoints are exact by construction.
    double w = std::exp(llo + (lhi - llo) * static_cast<double>(k) / (n - 1));
    if (k == 0) w = options.lo;
    if (k == n - 1) w = options.hi;
    w = std::clamp(w, options.lo, options.hi);
    if (!grid.excluded(w)) pts.insert(w);
  }
  // Puncture edges carry the largest curvature; pin them explicitly.
  for (const auto& [lo, hi] : grid.punctured) {
    if (lo >= options.lo && lo <= options.hi) pts.insert(lo);
    if (hi >= options.lo && hi <= options.hi) pts.insert(hi);
  }
  grid.points.assign(pts.begin(), pts.end());
  return grid;
}

void refine_grid(FrequencyGrid& grid,
                 const std::function<double(double)>& sample) {
  for (int level = 0; level < grid.options.refine_levels; ++level) {
    const std::size_t n = grid.points.size();
    if (n < 2) return;

    std::vector<double> values(n);
    parallel_for(n, [&](std::size_t i) { values[i] = sample(grid.points[i]); });

    std::vector<double> inserted;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      const double a = grid.points[i];
      const double b = grid.points[i + 1];
      const double va = values[i];
      const double vb = values[i + 1];
      const bool sign_change = (va < 0) != (vb < 0);
      const bool steep =
          std::abs(vb - va) >
          0.5 * (std::abs(va) + std::abs(vb) + 1e-300);
      if (!sign_change && !steep) continue;
      const double mid = std::sqrt(a * b);
      if (mid <= a || mid >= b || grid.excluded(mid)) continue;
      inserted.push_back(mid);
      grid.refinement_log.push_back(
          {a, b, sign_change ? "sign change" : "steep"});
    }
    if (inserted.empty()) return;
    grid.points.insert(grid.points.end(), inserted.begin(), inserted.end());
    std::sort(grid.points.begin(), grid.points.end());
  }
}

}
