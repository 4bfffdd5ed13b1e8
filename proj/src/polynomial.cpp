#include "nistab/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include "nistab/errors.hpp"

namespace nistab {

namespace {

void strip_leading_zeros(std::vector<double>& c) {
  while (!c.empty() && c.back() == 0.0) c.pop_back();
}

double factorial(int m) {
  double f = 1;
  for (int k = 2; k <= m; ++k) f *= k;
  return f;
}

}

Polynomial::Polynomial(std::vector<double> ascending)
    : coeffs_(std::move(ascending)) {
  strip_leading_zeros(coeffs_);
}

Polynomial Polynomial::constant(double c) {
  return Polynomial{{c}};
}

double Polynomial::leading() const {
  return coeffs_.empty() ? 0.0 : coeffs_.back();
}

Complex Polynomial::eval(Complex s) const {
  Complex acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * s + *it;
  return acc;
}

double Polynomial::eval(double s) const {
  double acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * s + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return zero();
  std::vector<double> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    d[k - 1] = coeffs_[k] * static_cast<double>(k);
  return Polynomial{std::move(d)};
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  std::vector<double> c(std::max(coeffs_.size(), rhs.coeffs_.size()), 0.0);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) c[k] += coeffs_[k];
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) c[k] += rhs.coeffs_[k];
  return Polynomial{std::move(c)};
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
  return *this + (-rhs);
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  if (is_zero() || rhs.is_zero()) return zero();
  std::vector<double> c(coeffs_.size() + rhs.coeffs_.size() - 1, 0.0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
      c[i + j] += coeffs_[i] * rhs.coeffs_[j];
  return Polynomial{std::move(c)};
}

Polynomial Polynomial::operator*(double scale) const {
  std::vector<double> c = coeffs_;
  for (double& v : c) v *= scale;
  return Polynomial{std::move(c)};
}

Polynomial Polynomial::operator-() const {
  return *this * -1.0;
}

std::vector<Complex> roots(const Polynomial& p) {
  const int n = p.degree();
  if (n < 0) throw Error("roots of the zero polynomial are undefined");
  if (n == 0) return {};

  const auto& c = p.coeffs();
  RMat companion = RMat::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -c[i] / c[n];

  Eigen::EigenSolver<RMat> solver(companion, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    throw Error("companion eigenvalue iteration failed");

  const Polynomial dp = p.derivative();
  std::vector<Complex> out(n);
  for (int i = 0; i < n; ++i) {
    Complex r = solver.eigenvalues()(i);
    const Complex fp = dp.eval(r);
    if (std::abs(fp) > 0) {
      const Complex pv = p.eval(r);
      const Complex step = pv / fp;
      // Guard: near a repeated root both p and p' sit at rounding level and
      // their quotient is noise of order one; keep the step only when it is
      // small and verifiably reduces |p|.
      if (std::abs(step) < 0.5 * (1.0 + std::abs(r)) &&
          std::abs(p.eval(r - step)) < std::abs(pv))
        r -= step;
    }
    out[i] = r;
  }
  std::sort(out.begin(), out.end(), [](Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return out;
}

std::vector<RootCluster> cluster_roots(const Polynomial& p,
                                       const std::vector<Complex>& rts,
                                       double rel_tol) {
  std::vector<RootCluster> clusters;
  std::vector<bool> used(rts.size(), false);

  double coeff_scale = 0;
  for (double c : p.coeffs()) coeff_scale = std::max(coeff_scale, std::abs(c));
  if (coeff_scale == 0) coeff_scale = 1;

  for (std::size_t i = 0; i < rts.size(); ++i) {
    if (used[i]) continue;
    Complex sum = rts[i];
    int count = 1;
    used[i] = true;
    // Single-link growth: compare against the running mean so conjugate-pair
    // splits around the real axis still merge.
    for (std::size_t j = i + 1; j < rts.size(); ++j) {
      if (used[j]) continue;
      const Complex mean = sum / static_cast<double>(count);
      if (std::abs(rts[j] - mean) <= rel_tol * (1.0 + std::abs(mean))) {
        sum += rts[j];
        ++count;
        used[j] = true;
      }
    }
    RootCluster cl;
    cl.value = sum / static_cast<double>(count);
    cl.multiplicity = count;

    Polynomial d = p;
    for (int m = 0; m < count; ++m) d = d.derivative();
    cl.condition =
        std::abs(d.eval(cl.value)) / (factorial(count) * coeff_scale);
    cl.ill_conditioned = cl.condition < 1e-10;
    clusters.push_back(cl);
  }
  return clusters;
}

}
