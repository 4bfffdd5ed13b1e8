#include "nistab/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "nistab/errors.hpp"

namespace nistab {

double hermitian_defect(const CMat& x) {
  const double nx = x.norm();
  return (x - x.adjoint()).norm() / std::max(1.0, nx);
}

CMat hermitian_part(const CMat& x) {
  return 0.5 * (x + x.adjoint());
}

double EigExtremes::scale() const {
  return std::max(std::abs(min_eig), std::abs(max_eig));
}

namespace {

Eigen::SelfAdjointEigenSolver<CMat> solve_hermitian(const CMat& x,
                                                    const Tolerances& tol,
                                                    bool vectors) {
  if (x.rows() != x.cols())
    throw DimensionError("hermitian eigenvalues of non-square matrix");
  if (hermitian_defect(x) > tol.hermitian_defect)
    throw NotHermitianError("matrix exceeds hermitian defect tolerance");
  Eigen::SelfAdjointEigenSolver<CMat> solver;
  solver.compute(hermitian_part(x), vectors ? Eigen::ComputeEigenvectors
                                            : Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw Error("hermitian eigenvalue iteration failed");
  return solver;
}

}

EigExtremes hermitian_extremes(const CMat& x, const Tolerances& tol) {
  const auto solver = solve_hermitian(x, tol, false);
  EigExtremes e;
  e.min_eig = solver.eigenvalues().minCoeff();
  e.max_eig = solver.eigenvalues().maxCoeff();
  return e;
}

RVec hermitian_eigenvalues(const CMat& x, const Tolerances& tol) {
  return solve_hermitian(x, tol, false).eigenvalues();
}

std::pair<double, double> svd_extremes(const CMat& x) {
  if (x.size() == 0) return {0.0, 0.0};
  Eigen::JacobiSVD<CMat> svd(x);
  const auto& sv = svd.singularValues();
  return {sv(sv.size() - 1), sv(0)};
}

double spectral_norm(const CMat& x) {
  return svd_extremes(x).second;
}

double spectral_radius(const CMat& x) {
  if (x.rows() != x.cols())
    throw DimensionError("spectral radius of non-square matrix");
  Eigen::ComplexEigenSolver<CMat> solver(x, false);
  if (solver.info() != Eigen::Success)
    throw Error("eigenvalue iteration failed");
  return solver.eigenvalues().cwiseAbs().maxCoeff();
}

bool psd_within(const EigExtremes& e, const Tolerances& tol) {
  return e.min_eig >= -tol.psd_rel * (1.0 + e.scale());
}

bool pd_with_margin(const EigExtremes& e, const Tolerances& tol) {
  return e.min_eig > 0 && e.min_eig >= tol.strict_rel * e.scale();
}

CMat inv_sqrt_pd(const CMat& x, const Tolerances& tol) {
  const auto solver = solve_hermitian(x, tol, true);
  const RVec& eigs = solver.eigenvalues();
  const double scale = std::max(std::abs(eigs.minCoeff()), eigs.maxCoeff());
  // Positivity is judged against eigensolver noise, not a coarser relative
  // floor: a matrix like I + B*B is positive definite with smallest
  // eigenvalue >= 1 yet its condition number can reach 1e13, and a floor
  // proportional to psd_rel * scale would reject it. The residual check
  // below guards the quality of the result.
  const double noise =
      64.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, scale);
  if (!(eigs.minCoeff() > noise))
    throw NotPositiveDefiniteError(
        "inverse square root requires a positive definite matrix");
  const RVec inv_sqrt = eigs.cwiseSqrt().cwiseInverse();
  const CMat s = solver.eigenvectors() * inv_sqrt.asDiagonal() *
                 solver.eigenvectors().adjoint();
  const double residual =
      (s * s * hermitian_part(x) - CMat::Identity(x.rows(), x.cols())).norm();
  if (residual > tol.inv_sqrt_residual * (1.0 + x.norm()))
    throw Error("inverse square root residual check failed");
  return s;
}

RayTestResult real_ray_spectrum_test(const CMat& x, double threshold,
                                     const Tolerances& tol) {
  if (x.rows() != x.cols())
    throw DimensionError("ray test on non-square matrix");
  RayTestResult result;
  if (x.rows() == 0) return result;
  Eigen::ComplexEigenSolver<CMat> solver(x, false);
  if (solver.info() != Eigen::Success)
    throw Error("eigenvalue iteration failed");
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    const Complex ev = solver.eigenvalues()(i);
    const bool real_like = std::abs(ev.imag()) <= tol.ray_im * (1.0 + std::abs(ev));
    const bool beyond = ev.real() >= threshold * (1.0 - tol.ray_re);
    if (real_like && beyond) {
      if (result.clear || ev.real() > result.witness->real()) {
        result.clear = false;
        result.witness = ev;
        result.tau_star = 1.0 / ev.real();
      }
    }
  }
  return result;
}

}
