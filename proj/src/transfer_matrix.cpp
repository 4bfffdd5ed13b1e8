#include "nistab/transfer_matrix.hpp"

#include <algorithm>
#include <cmath>

#include "nistab/errors.hpp"

namespace nistab {

DelayedRationalTerm::DelayedRationalTerm(Polynomial num, Polynomial den,
                                         double delay)
    : num_(std::move(num)), den_(std::move(den)), delay_(delay) {
  if (den_.is_zero())
    throw SchemaError("term denominator is the zero polynomial");
  if (!(delay_ >= 0.0))
    throw SchemaError("term delay must be finite and non-negative");
  if (num_.degree() > den_.degree())
    throw SchemaError("improper term: numerator degree exceeds denominator");
  if (!num_.is_zero()) {
    den_roots_ = roots(den_);
    den_clusters_ = cluster_roots(den_, den_roots_);
  }
}

Complex DelayedRationalTerm::eval(Complex s) const {
  if (num_.is_zero()) return 0.0;
  Complex v = num_.eval(s) / den_.eval(s);
  if (delay_ > 0.0) v *= std::exp(-delay_ * s);
  return v;
}

Complex ScalarTF::eval(Complex s) const {
  Complex acc = 0.0;
  for (const auto& t : terms) acc += t.eval(s);
  return acc;
}

TransferMatrix::TransferMatrix(int rows, int cols)
    : rows_(rows), cols_(cols) {
  if (rows <= 0 || cols <= 0)
    throw DimensionError("transfer matrix dimensions must be positive");
  entries_.resize(static_cast<std::size_t>(rows) * cols);
}

ScalarTF& TransferMatrix::entry(int r, int c) {
  return entries_[static_cast<std::size_t>(r) * cols_ + c];
}

const ScalarTF& TransferMatrix::entry(int r, int c) const {
  return entries_[static_cast<std::size_t>(r) * cols_ + c];
}

bool TransferMatrix::has_delay() const {
  for (const auto& e : entries_)
    for (const auto& t : e.terms)
      if (t.delay() > 0.0 && !t.num().is_zero()) return true;
  return false;
}

CMat TransferMatrix::evaluate(Complex s, const Tolerances& tol) const {
  const double guard = tol.pole_proximity * (1.0 + std::abs(s));
  for (const auto& e : entries_)
    for (const auto& t : e.terms)
      for (const Complex& r : t.den_roots())
        if (std::abs(s - r) <= guard)
          throw PoleProximityError("evaluation point within guard distance of a pole");

  CMat m(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m(i, j) = entry(i, j).eval(s);
  return m;
}

CMat TransferMatrix::dc_gain(const Tolerances& tol) const {
  for (const auto& e : entries_)
    for (const auto& t : e.terms)
      for (const Complex& r : t.den_roots())
        if (std::abs(r) <= tol.axis_pole_rel)
          throw PoleAtOriginError("DC gain undefined: pole at the origin");
  return evaluate(0.0, tol);
}

CMat TransferMatrix::inf_gain() const {
  CMat m = CMat::Zero(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      Complex acc = 0.0;
      for (const auto& t : entry(i, j).terms) {
        if (t.delay() > 0.0 || t.num().is_zero()) continue;
        if (t.num().degree() == t.den().degree())
          acc += t.num().leading() / t.den().leading();
      }
      m(i, j) = acc;
    }
  return m;
}

namespace {

// Merge tolerance for identifying the same axis frequency across entries.
double axis_merge_tol(double omega) { return 1e-6 * (1.0 + omega); }

}

PoleReport TransferMatrix::find_poles(const Tolerances& tol) const {
  PoleReport report;
  std::vector<double> axis_omegas;
  std::vector<bool> axis_simple;

  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      for (const auto& t : entry(i, j).terms) {
        for (const auto& cl : t.den_clusters()) {
          if (cl.ill_conditioned)
            report.diagnostics.push_back(
                "ill-conditioned denominator root near (" +
                std::to_string(cl.value.real()) + ", " +
                std::to_string(cl.value.imag()) + ") in entry (" +
                std::to_string(i) + ", " + std::to_string(j) + ")");
          const double re = cl.value.real();
          const double im = cl.value.imag();
          const double mag = std::abs(cl.value);
          if (std::abs(re) <= tol.axis_pole_rel * (1.0 + mag)) {
            if (std::abs(im) <= tol.axis_pole_rel * (1.0 + mag)) {
              report.origin_pole = true;
              continue;
            }
            if (im < 0) continue;  // conjugate folded onto omega0 > 0
            bool merged = false;
            for (std::size_t k = 0; k < axis_omegas.size(); ++k)
              if (std::abs(axis_omegas[k] - im) <= axis_merge_tol(im)) {
                axis_simple[k] = axis_simple[k] && cl.multiplicity == 1;
                merged = true;
                break;
              }
            if (!merged) {
              axis_omegas.push_back(im);
              axis_simple.push_back(cl.multiplicity == 1);
            }
          } else if (re > 0) {
            for (int m = 0; m < cl.multiplicity; ++m)
              report.open_rhp.push_back(cl.value);
          } else {
            report.open_lhp_count += cl.multiplicity;
          }
        }
      }

  std::vector<std::size_t> order(axis_omegas.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return axis_omegas[a] < axis_omegas[b];
  });

  for (std::size_t k : order) {
    AxisPole pole;
    pole.omega0 = axis_omegas[k];
    pole.simple = axis_simple[k];
    if (pole.simple) {
      pole.residue = residue_matrix(pole.omega0, tol);
      pole.residue_hermitian_defect = (pole.residue - pole.residue.adjoint()).norm() /
                                      std::max(1.0, pole.residue.norm());
    } else {
      pole.residue = CMat::Zero(rows_, cols_);
      report.diagnostics.push_back("repeated imaginary-axis pole at omega0 = " +
                                   std::to_string(pole.omega0));
    }
    report.axis.push_back(std::move(pole));
  }
  return report;
}

CMat TransferMatrix::residue_matrix(double omega0, const Tolerances& tol) const {
  (void)tol;
  const Complex s0(0.0, omega0);
  CMat res = CMat::Zero(rows_, cols_);
  const double merge = axis_merge_tol(omega0);

  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      Complex acc = 0.0;
      for (const auto& t : entry(i, j).terms) {
        for (const auto& cl : t.den_clusters()) {
          if (std::abs(cl.value - s0) > merge) continue;
          if (cl.multiplicity != 1)
            throw NotSimplePoleError(
                "residue requested at a repeated imaginary-axis pole");
          Complex num_val = t.num().eval(s0);
          if (t.delay() > 0.0) num_val *= std::exp(-t.delay() * s0);
          const Complex dprime = t.den().derivative().eval(s0);
          acc += Complex(0.0, 1.0) * num_val / dprime;
        }
      }
      res(i, j) = acc;
    }
  return res;
}

}
