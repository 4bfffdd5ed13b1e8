#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "nistab/transfer_matrix.hpp"
#include "nistab/types.hpp"

namespace nistab {

// Closed contour around the right half plane: the imaginary axis traversed
// from +jR down to -jR with radius-epsilon semicircular detours to the right
// of every +-j*omega0 in indent_points, closed by the counterclockwise arc
// |s| = R through +R. Net phase gain of det(I - tau G Gbar) along it counts
// closed-loop poles strictly inside.
struct ContourSpec {
  std::vector<double> indent_points;  // ascending, omega0 > 0
  double epsilon = 0;                 // indent radius
  double arc_radius = 1e6;
  int samples_axis = 4096;     // per axis segment
  int samples_indent = 1024;   // per semicircle
  int samples_arc = 1024;
};

struct ContourOverrides {
  std::optional<double> epsilon;
  std::optional<double> arc_radius;
  std::optional<int> samples_axis;
  std::optional<int> samples_indent;
  std::optional<int> samples_arc;
};

ContourSpec build_contour(const TransferMatrix& g, const TransferMatrix& gbar,
                          const ContourOverrides& overrides = {},
                          const Tolerances& tol = {});

struct ContourSample {
  int segment = 0;
  Complex s;
  Complex det;
  double phase = 0;  // cumulative unwrapped phase up to this sample
};

struct WindingResult {
  int winding = 0;
  double min_abs_det = 0;
  double residual_cycles = 0;  // |total/2pi - winding|
  double arc_deviation = 0;    // relative det deviation from the arc limit
  std::vector<ContourSample> phase_path;
  std::vector<std::string> diagnostics;
};

// Argument-principle winding of det(I - tau G(s) Gbar(s)). Throws
// ContourZeroError when |det| dips below tol.det_floor (tau sits on a
// stability boundary) and PhaseJumpError when a phase step cannot be
// brought under pi/2 by bisection.
WindingResult winding_number(const TransferMatrix& g,
                             const TransferMatrix& gbar, double tau,
                             const ContourSpec& contour,
                             const Tolerances& tol = {});

// Exact-arithmetic cross-check for delay-free systems: roots of the unreduced
// numerator of det(I - tau G Gbar). At tau = 0 these are the open-loop
// denominator roots; closed-loop right-half-plane poles appear directly.
std::vector<Complex> closed_loop_poles_rational(const TransferMatrix& g,
                                                const TransferMatrix& gbar,
                                                double tau = 1.0);

// Columns: segment, s_re, s_im, det_re, det_im, unwrapped_phase.
void write_contour_csv(std::ostream& os, const WindingResult& result);

}
