#pragma once

#include <string>
#include <vector>

#include "nistab/polynomial.hpp"
#include "nistab/types.hpp"

namespace nistab {

// num(s) / den(s) * exp(-delay * s) with real coefficients, deg num <= deg den
// and delay >= 0. Denominator roots are computed once at construction and
// reused by every pole query.
class DelayedRationalTerm {
 public:
  DelayedRationalTerm(Polynomial num, Polynomial den, double delay = 0.0);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  double delay() const { return delay_; }
  const std::vector<Complex>& den_roots() const { return den_roots_; }
  const std::vector<RootCluster>& den_clusters() const { return den_clusters_; }

  Complex eval(Complex s) const;

 private:
  Polynomial num_;
  Polynomial den_;
  double delay_ = 0.0;
  std::vector<Complex> den_roots_;
  std::vector<RootCluster> den_clusters_;
};

// Scalar transfer function: a sum of delayed rational terms. An empty sum is
// the zero entry.
struct ScalarTF {
  std::vector<DelayedRationalTerm> terms;

  Complex eval(Complex s) const;
  bool is_zero() const { return terms.empty(); }
};

// Simple pole pair at +-j*omega0 together with the residue matrix of
// j * R(s) at +j*omega0.
struct AxisPole {
  double omega0 = 0;
  CMat residue;
  bool simple = true;
  double residue_hermitian_defect = 0;
};

struct PoleReport {
  std::vector<Complex> open_rhp;
  std::vector<AxisPole> axis;   // omega0 > 0, conjugates folded
  int open_lhp_count = 0;
  bool origin_pole = false;
  std::vector<std::string> diagnostics;  // ill-conditioned root flags etc.
};

class TransferMatrix {
 public:
  TransferMatrix(int rows, int cols);

  static TransferMatrix zero(int rows, int cols) {
    return TransferMatrix(rows, cols);
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  ScalarTF& entry(int r, int c);
  const ScalarTF& entry(int r, int c) const;

  bool has_delay() const;
  bool is_square() const { return rows_ == cols_; }

  // Pointwise evaluation at s. Throws PoleProximityError when s is within
  // tol.pole_proximity * (1 + |s|) of any denominator root.
  CMat evaluate(Complex s, const Tolerances& tol = {}) const;

  // evaluate(0); throws PoleAtOriginError first when a pole sits at s = 0.
  CMat dc_gain(const Tolerances& tol = {}) const;

  // Entrywise limit along the real axis: delayed terms vanish, rational
  // terms contribute the leading-coefficient ratio when degrees match.
  CMat inf_gain() const;

  // Denominator root census: open-RHP roots, folded imaginary-axis pole
  // pairs with residues, and the open-LHP count.
  PoleReport find_poles(const Tolerances& tol = {}) const;

  // Residue matrix of j * R(s) at the simple pole +j*omega0. Entries without
  // a pole there contribute zero. Throws NotSimplePoleError on a repeated
  // denominator root at +-j*omega0.
  CMat residue_matrix(double omega0, const Tolerances& tol = {}) const;

 private:
  int rows_;
  int cols_;
  std::vector<ScalarTF> entries_;
};

}
