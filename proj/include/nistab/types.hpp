#pragma once

#include <Eigen/Dense>
#include <complex>

namespace nistab {

using Complex = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using RMat = Eigen::MatrixXd;
using RVec = Eigen::VectorXd;

// Every comparison against zero in the library goes through one of these
// knobs. Relative tolerances are applied as tol * (1 + scale) where scale is
// the magnitude of the quantities entering the comparison.
struct Tolerances {
  // |Re(root)| <= axis_pole_rel * (1 + |root|) classifies a root as an
  // imaginary-axis pole.
  double axis_pole_rel = 1e-8;
  // Minimum distance from an evaluation point to any pole, relative to
  // (1 + |s|).
  double pole_proximity = 1e-6;
  // Eigenvalue floor for positive-semidefinite acceptance:
  // min_eig >= -psd_rel * (1 + max |eig|).
  double psd_rel = 1e-9;
  // Positive-definiteness with margin (pd_with_margin) requires
  // min_eig >= strict_rel * max |eig|.
  double strict_rel = 1e-8;
  // Frobenius defect ||X - X^*|| / max(1, ||X||) accepted as Hermitian.
  double hermitian_defect = 1e-8;
  // Residual bound for the inverse square root: ||S*S*X - I||.
  double inv_sqrt_residual = 1e-10;
  // Contour evaluations require |det| above this floor.
  double det_floor = 1e-9;
  // Realness / threshold slack for the real-ray eigenvalue test.
  double ray_re = 1e-9;
  double ray_im = 1e-9;
  // Strict negative-imaginary margin, scaled by omega / (1 + omega^2).
  double strict_ni_margin = 1e-6;
};

}
