#pragma once

#include <optional>
#include <utility>

#include "nistab/types.hpp"

namespace nistab {

// Frobenius asymmetry ||X - X^*||_F / max(1, ||X||_F).
double hermitian_defect(const CMat& x);

CMat hermitian_part(const CMat& x);

struct EigExtremes {
  double min_eig = 0;
  double max_eig = 0;
  // max(|min_eig|, |max_eig|); the scale used by relative comparisons.
  double scale() const;
};

// Symmetrizes within tol.hermitian_defect; throws NotHermitianError beyond.
EigExtremes hermitian_extremes(const CMat& x, const Tolerances& tol = {});

RVec hermitian_eigenvalues(const CMat& x, const Tolerances& tol = {});

// {smallest, largest} singular value.
std::pair<double, double> svd_extremes(const CMat& x);

double spectral_norm(const CMat& x);
double spectral_radius(const CMat& x);

// min_eig >= -psd_rel * (1 + max |eig|).
bool psd_within(const EigExtremes& e, const Tolerances& tol = {});
// min_eig > 0 and min_eig >= strict_rel * max |eig|.
bool pd_with_margin(const EigExtremes& e, const Tolerances& tol = {});

// X^{-1/2} for Hermitian positive definite X via the spectral decomposition.
// Verifies ||S*S*X - I|| below tol.inv_sqrt_residual.
CMat inv_sqrt_pd(const CMat& x, const Tolerances& tol = {});

struct RayTestResult {
  // True when no eigenvalue of the tested matrix is (numerically) real with
  // real part at or above the threshold.
  bool clear = true;
  std::optional<Complex> witness;   // offending eigenvalue
  std::optional<double> tau_star;   // 1 / Re(witness)
};

// Scans eig(X) for real eigenvalues >= threshold. Realness:
// |Im| <= ray_im * (1 + |eig|); threshold slack: Re >= threshold * (1 - ray_re).
// Among hits, the one with largest real part (smallest tau_star) is reported.
RayTestResult real_ray_spectrum_test(const CMat& x, double threshold,
                                     const Tolerances& tol = {});

}
