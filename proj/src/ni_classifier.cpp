#include "nistab/ni_classifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "nistab/errors.hpp"
#include "nistab/linalg.hpp"
#include "nistab/parallel.hpp"

namespace nistab {

const char* to_string(NIVerdict v) {
  switch (v) {
    case NIVerdict::StrictlyNI: return "StrictlyNI";
    case NIVerdict::StableNI: return "StableNI";
    case NIVerdict::NI: return "NI";
    case NIVerdict::NotNI: return "NotNI";
  }
  return "NotNI";
}

CMat ni_form(const TransferMatrix& m, double omega, const Tolerances& tol) {
  if (!m.is_square())
    throw DimensionError("NI form requires a square transfer matrix");
  const CMat r = m.evaluate(Complex(0.0, omega), tol);
  return Complex(0.0, 1.0) * (r - r.adjoint());
}

double ni_defect(const TransferMatrix& m, double omega,
                 const Tolerances& tol) {
  return hermitian_extremes(ni_form(m, omega, tol), tol).min_eig;
}

namespace {

std::string complex_str(Complex z) {
  return "(" + std::to_string(z.real()) + ", " + std::to_string(z.imag()) +
         ")";
}

}

NIClassification classify(const TransferMatrix& m,
                          const GridOptions& grid_options,
                          double strict_margin, const Tolerances& tol) {
  if (!m.is_square())
    throw DimensionError("classification requires a square transfer matrix");

  NIClassification out;
  out.poles = m.find_poles(tol);
  for (const auto& d : out.poles.diagnostics) out.diagnostics.push_back(d);

  if (!out.poles.open_rhp.empty()) {
    out.verdict = NIVerdict::NotNI;
    out.diagnostics.push_back("open right-half-plane pole at " +
                              complex_str(out.poles.open_rhp.front()));
    return out;
  }
  if (out.poles.origin_pole) {
    out.verdict = NIVerdict::NotNI;
    out.diagnostics.push_back("pole at the origin");
    return out;
  }
  for (const auto& pole : out.poles.axis) {
    if (!pole.simple) {
      out.verdict = NIVerdict::NotNI;
      out.diagnostics.push_back("repeated axis pole at omega0 = " +
                                std::to_string(pole.omega0));
      return out;
    }
    if (pole.residue_hermitian_defect > tol.hermitian_defect) {
      out.verdict = NIVerdict::NotNI;
      out.diagnostics.push_back("non-Hermitian residue at omega0 = " +
                                std::to_string(pole.omega0));
      return out;
    }
    const EigExtremes res = hermitian_extremes(pole.residue, tol);
    if (!psd_within(res, tol)) {
      out.verdict = NIVerdict::NotNI;
      out.witness_frequency = pole.omega0;
      out.witness_min_eig = res.min_eig;
      out.diagnostics.push_back(
          "residue at omega0 = " + std::to_string(pole.omega0) +
          " has negative eigenvalue " + std::to_string(res.min_eig));
      return out;
    }
  }

  GridOptions opts = grid_options;
  opts.delay_present = m.has_delay();
  std::vector<double> axis_omegas;
  for (const auto& pole : out.poles.axis) axis_omegas.push_back(pole.omega0);
  out.grid = make_base_grid(opts, axis_omegas);
  refine_grid(out.grid, [&](double w) { return ni_defect(m, w, tol); });

  const std::size_t n = out.grid.points.size();
  out.defects.resize(n);
  std::vector<double> scales(n);
  parallel_for(n, [&](std::size_t i) {
    const EigExtremes e =
        hermitian_extremes(ni_form(m, out.grid.points[i], tol), tol);
    out.defects[i] = e.min_eig;
    scales[i] = e.scale();
  });

  // Worst relative violation decides NI; worst strict-floor slack decides
  // StrictlyNI. Scanning is sequential so witnesses are deterministic.
  bool ni_ok = true;
  bool strict_ok = true;
  double worst_violation = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double w = out.grid.points[i];
    const double floor_ni = -tol.psd_rel * (1.0 + scales[i]);
    if (out.defects[i] < floor_ni) {
      const double violation = out.defects[i] - floor_ni;
      if (ni_ok || violation < worst_violation) {
        worst_violation = violation;
        out.witness_frequency = w;
        out.witness_min_eig = out.defects[i];
      }
      ni_ok = false;
    }
    const double floor_strict = strict_margin * w / (1.0 + w * w);
    if (strict_ok && out.defects[i] < floor_strict) {
      strict_ok = false;
      if (ni_ok && !out.witness_frequency) {
        out.witness_frequency = w;
        out.witness_min_eig = out.defects[i];
      }
    }
  }

  if (!ni_ok) {
    out.verdict = NIVerdict::NotNI;
    out.diagnostics.push_back(
        "NI inequality fails at omega = " +
        std::to_string(*out.witness_frequency) + " (min eig " +
        std::to_string(*out.witness_min_eig) + ")");
    return out;
  }
  if (!out.poles.axis.empty()) {
    out.verdict = NIVerdict::NI;
    return out;
  }
  out.verdict = strict_ok ? NIVerdict::StrictlyNI : NIVerdict::StableNI;
  return out;
}

DetCondition strict_det_condition(const TransferMatrix& m,
                                  const FrequencyGrid& grid,
                                  const Tolerances& tol) {
  DetCondition cond;
  cond.min_sigma = std::numeric_limits<double>::infinity();
  const std::size_t n = grid.points.size();
  std::vector<double> sigmas(n);
  parallel_for(n, [&](std::size_t i) {
    const CMat v = m.evaluate(Complex(0.0, grid.points[i]), tol);
    sigmas[i] = svd_extremes(v).first;
  });
  for (std::size_t i = 0; i < n; ++i) {
    if (sigmas[i] < cond.min_sigma) {
      cond.min_sigma = sigmas[i];
      cond.witness_omega = grid.points[i];
    }
  }
  cond.ok = cond.min_sigma > tol.det_floor;
  return cond;
}

}
