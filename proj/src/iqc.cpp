#include "nistab/iqc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "nistab/errors.hpp"

namespace nistab {

const char* to_string(MultiplierLabel label) {
  switch (label) {
    case MultiplierLabel::Pi0: return "pi0";
    case MultiplierLabel::PiInf: return "pi_inf";
    case MultiplierLabel::PiMid: return "pi_mid";
    case MultiplierLabel::Custom: return "custom";
  }
  return "custom";
}

const char* to_string(MultiplierConstruction c) {
  switch (c) {
    case MultiplierConstruction::GraphSymbol: return "graph_symbol";
    case MultiplierConstruction::GainBound: return "gain_bound";
    case MultiplierConstruction::ZeroGainProduct: return "zero_gain_product";
    case MultiplierConstruction::Passivity: return "passivity";
    case MultiplierConstruction::UserSupplied: return "user_supplied";
    case MultiplierConstruction::Midband: return "midband";
  }
  return "user_supplied";
}

const char* to_string(PairMode mode) {
  return mode == PairMode::StrictSingle ? "strict_single" : "strict_family";
}

std::vector<double> uniform_tau_grid(int points) {
  if (points < 2) throw Error("tau grid needs at least the two endpoints");
  std::vector<double> taus(points);
  for (int k = 0; k < points; ++k)
    taus[k] = static_cast<double>(k) / (points - 1);
  return taus;
}

HermitianMultiplier feasibility_multiplier(const CMat& b,
                                           MultiplierLabel label,
                                           const Tolerances&) {
  if (b.rows() != b.cols())
    throw DimensionError("graph-symbol multiplier needs a square matrix");
  const int n = static_cast<int>(b.rows());
  // Pi = Y*Y with Y = (I + B*B)^{-1/2} [-B, I] equals [-B, I]* T [-B, I]
  // with T = (I + B*B)^{-1}; assembling it from the single Hermitian solve
  // stays accurate even when B has singular values spanning many orders
  // (I + B*B is then extremely ill conditioned but its inverse is benign,
  // every eigenvalue of T lies in (0, 1]).
  const CMat id = CMat::Identity(n, n);
  CMat t = (id + b.adjoint() * b).llt().solve(id);
  t = hermitian_part(t);
  CMat v(n, 2 * n);
  v.leftCols(n) = -b;
  v.rightCols(n) = id;
  HermitianMultiplier pi;
  pi.matrix = v.adjoint() * t * v;
  pi.label = label;
  pi.construction = MultiplierConstruction::GraphSymbol;
  return pi;
}

HermitianMultiplier midband_multiplier(int n) {
  if (n < 1) throw DimensionError("midband multiplier needs n >= 1");
  CMat m = CMat::Zero(2 * n, 2 * n);
  m.topRightCorner(n, n) = Complex(0, 1) * CMat::Identity(n, n);
  m.bottomLeftCorner(n, n) = Complex(0, -1) * CMat::Identity(n, n);
  return {m, MultiplierLabel::PiMid, MultiplierConstruction::Midband};
}

std::pair<HermitianMultiplier, HermitianMultiplier> gain_multipliers(
    const CMat& g0, const CMat& ginf) {
  auto build = [](const CMat& x, MultiplierLabel label) {
    const int n = static_cast<int>(x.rows());
    CMat m = CMat::Zero(2 * n, 2 * n);
    m.topLeftCorner(n, n) = x.adjoint() * x;
    m.bottomRightCorner(n, n) = -CMat::Identity(n, n);
    return HermitianMultiplier{m, label, MultiplierConstruction::GainBound};
  };
  return {build(g0, MultiplierLabel::Pi0),
          build(ginf, MultiplierLabel::PiInf)};
}

HermitianMultiplier zero_gain_product_multiplier(const CMat& ginf) {
  const int n = static_cast<int>(ginf.rows());
  CMat m = CMat::Zero(2 * n, 2 * n);
  m.topLeftCorner(n, n) = -(ginf.adjoint() * ginf);
  m.bottomRightCorner(n, n) = CMat::Identity(n, n);
  return {m, MultiplierLabel::PiInf,
          MultiplierConstruction::ZeroGainProduct};
}

HermitianMultiplier passivity_multiplier(int n) {
  CMat m = CMat::Zero(2 * n, 2 * n);
  m.topRightCorner(n, n) = CMat::Identity(n, n);
  m.bottomLeftCorner(n, n) = CMat::Identity(n, n);
  return {m, MultiplierLabel::Custom, MultiplierConstruction::Passivity};
}

HermitianMultiplier user_multiplier(const CMat& pi, MultiplierLabel label,
                                    const Tolerances& tol) {
  if (pi.rows() != pi.cols() || pi.rows() % 2 != 0)
    throw DimensionError("multiplier must be square with even dimension");
  if (hermitian_defect(pi) > tol.hermitian_defect)
    throw NotHermitianError("user multiplier is not Hermitian");
  return {pi, label, MultiplierConstruction::UserSupplied};
}

namespace {

struct Blocks {
  CMat p11, p12, p22;  // p21 = p12.adjoint()
};

Blocks split(const HermitianMultiplier& pi, Eigen::Index n) {
  if (pi.matrix.rows() != 2 * n || pi.matrix.cols() != 2 * n)
    throw DimensionError("multiplier dimension does not match the systems");
  return {pi.matrix.topLeftCorner(n, n), pi.matrix.topRightCorner(n, n),
          pi.matrix.bottomRightCorner(n, n)};
}

struct SingleForm {
  CMat form;
  double assembly;  // sum of term norms, bounding the combination roundoff
};

// [Abar; I]* Pi [Abar; I]
SingleForm single_upper_form(const Blocks& b, const CMat& abar) {
  const CMat quad = abar.adjoint() * b.p11 * abar;
  const CMat cross = b.p12.adjoint() * abar;  // p21 * abar
  return {quad + cross + cross.adjoint() + b.p22,
          quad.norm() + 2.0 * cross.norm() + b.p22.norm()};
}

// [I; A]* Pi [I; A]
CMat single_lower_form(const Blocks& b, const CMat& a) {
  const CMat cross = b.p12 * a;
  return b.p11 + cross + cross.adjoint() + a.adjoint() * b.p22 * a;
}

struct TauQuadratic {
  CMat c0, c1, c2;  // form(tau) = c0 + tau c1 + tau^2 c2
  double n0, n1, n2;  // term norms, bounding the combination roundoff

  CMat at(double tau) const { return c0 + tau * c1 + (tau * tau) * c2; }
  double assembly(double tau) const { return n0 + tau * n1 + tau * tau * n2; }
};

TauQuadratic make_quadratic(CMat c0, CMat c1, CMat c2) {
  TauQuadratic q{std::move(c0), std::move(c1), std::move(c2), 0, 0, 0};
  q.n0 = q.c0.norm();
  q.n1 = q.c1.norm();
  q.n2 = q.c2.norm();
  return q;
}

// [I; tau A]* Pi [I; tau A]
TauQuadratic lower_family(const Blocks& b, const CMat& a) {
  const CMat cross = b.p12 * a;
  return make_quadratic(b.p11, cross + cross.adjoint(),
                        a.adjoint() * b.p22 * a);
}

// [tau Abar; I]* Pi [tau Abar; I]
TauQuadratic upper_family(const Blocks& b, const CMat& abar) {
  const CMat cross = b.p12.adjoint() * abar;  // p21 * abar
  return make_quadratic(b.p22, cross + cross.adjoint(),
                        abar.adjoint() * b.p11 * abar);
}

// A strict inequality holds when the computed extreme eigenvalue clears the
// rounding noise of its own evaluation. That noise is of order machine
// epsilon relative to the larger of the form's magnitude and the term norms
// combined while assembling it (a near-cancelling combination leaves noise
// of the latter order even when the form itself is tiny). Anything coarser
// rejects legitimate certificates: the tau = 0 member of a graph-symbol
// family is (I + B*B)^{-1}, which for plant gains around 1e6 is a perfectly
// definite matrix of norm 1e-13.
double strict_noise_floor(double form_scale, double assembly_scale) {
  constexpr double k = 32.0 * std::numeric_limits<double>::epsilon();
  return k * std::max(form_scale, assembly_scale);
}

struct FamilyExtremes {
  double min_eig;
  double scale;
  // Each member is judged against its own noise floor; members can differ in
  // magnitude by many orders, so one shared floor would be meaningless.
  bool strict_ok;
};

FamilyExtremes family_extremes(const TauQuadratic& q,
                               const std::vector<double>& taus,
                               const Tolerances& tol) {
  FamilyExtremes fe{std::numeric_limits<double>::infinity(), 0.0, true};
  for (double tau : taus) {
    const EigExtremes e = hermitian_extremes(q.at(tau), tol);
    fe.min_eig = std::min(fe.min_eig, e.min_eig);
    fe.scale = std::max(fe.scale, e.scale());
    if (!(e.min_eig > strict_noise_floor(e.scale(), q.assembly(tau))))
      fe.strict_ok = false;
  }
  return fe;
}

bool nonstrict_pass(double worst, double scale, const Tolerances& tol) {
  return worst >= -tol.psd_rel * (1.0 + scale);
}

}

IqcCheckReport check_pair(const HermitianMultiplier& pi, const CMat& abar,
                          const CMat& a, const std::vector<double>& tau_grid,
                          PairMode mode, FreqPoint frequency,
                          const Tolerances& tol) {
  if (abar.rows() != abar.cols() || a.rows() != a.cols() ||
      abar.rows() != a.rows())
    throw DimensionError("check_pair needs square matrices of equal size");
  if (tau_grid.size() < 2 || tau_grid.front() != 0.0 ||
      tau_grid.back() != 1.0)
    throw Error("tau grid must start at 0 and end at 1");

  const Blocks b = split(pi, a.rows());
  IqcCheckReport report;
  report.tau_grid = tau_grid;
  report.frequency = frequency;
  report.mode = mode;

  bool strict_ok = false;
  if (mode == PairMode::StrictSingle) {
    const SingleForm uf = single_upper_form(b, abar);
    const EigExtremes upper = hermitian_extremes(uf.form, tol);
    report.upper_margin = -upper.max_eig;
    report.upper_scale = upper.scale();
    strict_ok = report.upper_margin >
                strict_noise_floor(report.upper_scale, uf.assembly);
    const FamilyExtremes lower =
        family_extremes(lower_family(b, a), tau_grid, tol);
    report.lower_min = lower.min_eig;
    report.lower_scale = lower.scale;
  } else {
    const FamilyExtremes family =
        family_extremes(upper_family(b, abar), tau_grid, tol);
    report.upper_margin = family.min_eig;
    report.upper_scale = family.scale;
    strict_ok = family.strict_ok;
    const EigExtremes single = hermitian_extremes(single_lower_form(b, a), tol);
    report.lower_min = -single.max_eig;
    report.lower_scale = single.scale();
  }

  report.pass =
      strict_ok && nonstrict_pass(report.lower_min, report.lower_scale, tol);
  return report;
}

FeasibilityResult feasibility_at_point(const CMat& a, const CMat& b,
                                       MultiplierLabel label,
                                       const Tolerances& tol) {
  FeasibilityResult result;
  const RayTestResult ray = real_ray_spectrum_test(b * a, 1.0, tol);
  if (ray.clear) {
    result.feasible = true;
    result.multiplier = feasibility_multiplier(b, label, tol);
  } else {
    result.witness = ray.witness;
    result.tau_star = ray.tau_star;
  }
  return result;
}

BandPointCheck band_point_check(const HermitianMultiplier& pi,
                                const CMat& gbar_w, const CMat& g_w,
                                const std::vector<double>& tau_grid,
                                PairMode mode, const Tolerances& tol) {
  const Blocks b = split(pi, g_w.rows());
  BandPointCheck out;
  const double sv = svd_extremes(gbar_w).second;
  const double coupling = 1.0 + sv * sv;

  if (mode == PairMode::StrictSingle) {
    const SingleForm uf = single_upper_form(b, gbar_w);
    const EigExtremes upper = hermitian_extremes(uf.form, tol);
    out.strict_value = -upper.max_eig;
    const FamilyExtremes lower =
        family_extremes(lower_family(b, g_w), tau_grid, tol);
    out.other_value = lower.min_eig;
    // other side must stay above -strict_value / coupling
    out.bound = -out.strict_value / coupling;
    out.pass =
        out.strict_value > strict_noise_floor(upper.scale(), uf.assembly) &&
        out.other_value > out.bound;
  } else {
    const FamilyExtremes family =
        family_extremes(upper_family(b, gbar_w), tau_grid, tol);
    out.strict_value = family.min_eig;
    const EigExtremes single = hermitian_extremes(single_lower_form(b, g_w), tol);
    out.other_value = single.max_eig;
    // single form must stay below strict_value / coupling
    out.bound = out.strict_value / coupling;
    out.pass = family.strict_ok && out.other_value < out.bound;
  }
  return out;
}

}
