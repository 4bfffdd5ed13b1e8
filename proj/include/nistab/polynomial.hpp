#pragma once

#include <vector>

#include "nistab/types.hpp"

namespace nistab {

// Real polynomial with coefficients stored in ascending powers:
// c[0] + c[1] s + ... + c[n] s^n. The zero polynomial has an empty
// coefficient vector and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<double> ascending);

  static Polynomial zero() { return Polynomial{}; }
  static Polynomial constant(double c);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<double>& coeffs() const { return coeffs_; }
  double leading() const;

  Complex eval(Complex s) const;
  double eval(double s) const;
  Polynomial derivative() const;

  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial operator*(const Polynomial& rhs) const;
  Polynomial operator*(double scale) const;
  Polynomial operator-() const;

  bool operator==(const Polynomial& rhs) const = default;

 private:
  std::vector<double> coeffs_;
};

// All complex roots (degree of them), from the companion-matrix eigenvalues
// followed by one guarded Newton step on each.
std::vector<Complex> roots(const Polynomial& p);

struct RootCluster {
  Complex value = 0;        // cluster mean
  int multiplicity = 1;
  // |p^(m)(value)| / (m! * coefficient scale); small values flag an
  // ill-conditioned (nearly repeated beyond its multiplicity) root.
  double condition = 0;
  bool ill_conditioned = false;
};

// Groups roots lying within rel_tol * (1 + |root|) of each other.
std::vector<RootCluster> cluster_roots(const Polynomial& p,
                                       const std::vector<Complex>& rts,
                                       double rel_tol = 1e-6);

}
