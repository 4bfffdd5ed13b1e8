#include "nistab/verdict.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "nistab/errors.hpp"
#include "nistab/linalg.hpp"
#include "nistab/parallel.hpp"

namespace nistab {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::StableForAllTau: return "StableForAllTau";
    case Verdict::UnstableAlongHomotopy: return "UnstableAlongHomotopy";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

const char* to_string(CertificatePath p) {
  switch (p) {
    case CertificatePath::None: return "none";
    case CertificatePath::GainBound: return "gain_bound";
    case CertificatePath::GainBoundMarginal: return "gain_bound_marginal";
    case CertificatePath::ZeroGainProduct: return "zero_gain_product";
    case CertificatePath::BandSplit: return "band_split";
    case CertificatePath::UserMultiplier: return "user_multiplier";
    case CertificatePath::EndpointInfeasible: return "endpoint_infeasible";
  }
  return "none";
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

FrequencyGrid build_scan_grid(const TransferMatrix& g,
                              const TransferMatrix& gbar,
                              const NIClassification& g_class,
                              const NIClassification& gbar_class,
                              const AnalysisOptions& options) {
  GridOptions opts = options.grid;
  opts.delay_present = g.has_delay() || gbar.has_delay();
  std::vector<double> axis;
  for (const auto& p : g_class.poles.axis) axis.push_back(p.omega0);
  for (const auto& p : gbar_class.poles.axis) axis.push_back(p.omega0);
  FrequencyGrid grid = make_base_grid(opts, axis);
  refine_grid(grid,
              [&](double w) { return ni_defect(gbar, w, options.tol); });
  refine_grid(grid, [&](double w) { return ni_defect(g, w, options.tol); });
  return grid;
}

bool hypothesis_gate(StabilityCertificate& cert) {
  bool ok = true;
  if (!cert.g_class.is_ni()) {
    ok = false;
    cert.diagnostics.push_back(
        std::string("hypothesis violated: G classified ") +
        to_string(cert.g_class.verdict));
  }
  if (!cert.gbar_class.is_strictly_ni()) {
    ok = false;
    cert.diagnostics.push_back(
        std::string("hypothesis violated: Gbar classified ") +
        to_string(cert.gbar_class.verdict));
  }
  if (!ok) {
    cert.verdict = Verdict::Inconclusive;
    for (const auto& d : cert.g_class.diagnostics)
      cert.diagnostics.push_back("G: " + d);
    for (const auto& d : cert.gbar_class.diagnostics)
      cert.diagnostics.push_back("Gbar: " + d);
  }
  return ok;
}

bool compute_endpoints(StabilityCertificate& cert, const TransferMatrix& g,
                       const TransferMatrix& gbar, const Tolerances& tol) {
  try {
    cert.g0 = g.dc_gain(tol);
    cert.gbar0 = gbar.dc_gain(tol);
  } catch (const PoleProximityError&) {
    cert.verdict = Verdict::Inconclusive;
    cert.diagnostics.push_back(
        "an imaginary-axis pole sits inside the evaluation guard of s = 0; "
        "endpoint analysis is not possible");
    return false;
  }
  cert.ginf = g.inf_gain();
  cert.gbarinf = gbar.inf_gain();
  cert.sigma0 = svd_extremes(cert.g0 * cert.gbar0).second;
  cert.sigmainf = svd_extremes(cert.ginf * cert.gbarinf).second;
  return true;
}

std::string margin_note(const char* where, const IqcCheckReport& r) {
  return std::string(where) + ": strict margin " +
         std::to_string(r.upper_margin) + ", non-strict min " +
         std::to_string(r.lower_min);
}

}

BandStructureResult verify_band_structure(
    const TransferMatrix& g, const TransferMatrix& gbar,
    const HermitianMultiplier& pi0, const HermitianMultiplier& pi_inf,
    PairMode mode, const FrequencyGrid& grid,
    const std::vector<double>& tau_grid, const Tolerances& tol) {
  const std::size_t n = grid.points.size();
  BandStructureResult result;
  if (n == 0) return result;

  const HermitianMultiplier pi_mid = midband_multiplier(g.rows());
  std::vector<char> pass_lo(n), pass_hi(n), pass_mid(n);
  std::vector<double> mid_margin(n);

  parallel_for(n, [&](std::size_t i) {
    const double w = grid.points[i];
    const CMat gw = g.evaluate(Complex(0.0, w), tol);
    const CMat bw = gbar.evaluate(Complex(0.0, w), tol);
    pass_lo[i] = band_point_check(pi0, bw, gw, tau_grid, mode, tol).pass;
    pass_hi[i] = band_point_check(pi_inf, bw, gw, tau_grid, mode, tol).pass;
    const IqcCheckReport mid = check_pair(pi_mid, bw, gw, tau_grid,
                                          PairMode::StrictSingle,
                                          FreqPoint::at(w), tol);
    pass_mid[i] = mid.pass;
    mid_margin[i] = mid.upper_margin;
  });

  std::size_t p = 0;
  while (p < n && pass_lo[p]) ++p;
  std::size_t q = n;
  while (q > 0 && pass_hi[q - 1]) --q;

  BandEdges edges;
  edges.low_anchored_only = (p == 0);
  edges.omega_lo = p > 0 ? grid.points[p - 1] : 0.0;
  edges.high_anchored_only = (q == n);
  edges.omega_hi = q < n ? grid.points[q] : kInf;

  if (p >= q) {
    edges.midband_empty = true;
    edges.mid_min_margin = kInf;
    result.ok = true;
    result.edges = edges;
    return result;
  }

  double min_margin = kInf;
  bool covered = true;
  for (std::size_t i = p; i < q; ++i) {
    if (!pass_mid[i]) {
      covered = false;
      break;
    }
    min_margin = std::min(min_margin, mid_margin[i]);
  }

  if (covered) {
    edges.mid_min_margin = min_margin;
    result.ok = true;
    result.edges = edges;
    return result;
  }
  result.edges = edges;
  result.gap = BandGap{edges.omega_lo, edges.omega_hi};
  return result;
}

StabilityCertificate analyze(const TransferMatrix& g,
                             const TransferMatrix& gbar,
                             const AnalysisOptions& options) {
  if (g.rows() != gbar.rows() || g.cols() != gbar.cols() || !g.is_square())
    throw DimensionError("analysis requires square systems of equal size");
  const Tolerances& tol = options.tol;

  StabilityCertificate cert;
  cert.g_class = classify(g, options.grid, options.strict_ni_margin, tol);
  cert.gbar_class =
      classify(gbar, options.grid, options.strict_ni_margin, tol);
  if (!hypothesis_gate(cert)) return cert;
  if (!compute_endpoints(cert, g, gbar, tol)) return cert;

  cert.tau_grid = uniform_tau_grid(options.tau_points);
  cert.grid = build_scan_grid(g, gbar, cert.g_class, cert.gbar_class, options);

  // Endpoint gain route: both products contractive.
  if (cert.sigma0 < 1.0 && cert.sigmainf < 1.0) {
    bool residues_pd = true;
    for (const auto& pole : cert.g_class.poles.axis) {
      if (!pd_with_margin(hermitian_extremes(pole.residue, tol), tol)) {
        residues_pd = false;
        cert.diagnostics.push_back(
            "axis-pole residue at omega0 = " + std::to_string(pole.omega0) +
            " is not positive definite; endpoint gain route skipped");
        break;
      }
    }
    if (residues_pd) {
      auto [pi0, pi_inf] = gain_multipliers(cert.g0, cert.ginf);
      const IqcCheckReport r0 =
          check_pair(pi0, cert.gbar0, cert.g0, cert.tau_grid,
                     PairMode::StrictSingle, FreqPoint::zero(), tol);
      const IqcCheckReport rinf =
          check_pair(pi_inf, cert.gbarinf, cert.ginf, cert.tau_grid,
                     PairMode::StrictSingle, FreqPoint::infinity(), tol);
      if (r0.pass && rinf.pass) {
        cert.verdict = Verdict::StableForAllTau;
        cert.path = cert.g_class.poles.axis.empty()
                        ? CertificatePath::GainBound
                        : CertificatePath::GainBoundMarginal;
        cert.pi0 = std::move(pi0);
        cert.pi_inf = std::move(pi_inf);
        cert.reports = {r0, rinf};
        return cert;
      }
      cert.diagnostics.push_back(
          "endpoint gain checks failed despite contractive products; " +
          margin_note("at 0", r0) + "; " + margin_note("at inf", rinf));
    }
  } else {
    cert.diagnostics.push_back(
        "endpoint gain route unavailable: max singular values " +
        std::to_string(cert.sigma0) + " at 0, " +
        std::to_string(cert.sigmainf) + " at inf");
  }

  // Vanishing-product route at infinity, contractive spectrum at zero.
  if (cert.g_class.is_stable_ni()) {
    bool gbarinf_psd = false;
    try {
      gbarinf_psd = psd_within(hermitian_extremes(cert.gbarinf, tol), tol);
    } catch (const NotHermitianError&) {
      cert.diagnostics.push_back("Gbar(inf) is not symmetric");
    }
    const double prod_norm = (cert.ginf * cert.gbarinf).norm();
    const bool prod_zero =
        prod_norm <=
        tol.psd_rel * (1.0 + cert.ginf.norm() * cert.gbarinf.norm());
    if (gbarinf_psd && prod_zero &&
        spectral_radius(cert.g0 * cert.gbar0) < 1.0) {
      HermitianMultiplier pi0 =
          feasibility_multiplier(cert.g0, MultiplierLabel::Pi0, tol);
      HermitianMultiplier pi_inf = zero_gain_product_multiplier(cert.ginf);
      const IqcCheckReport r0 =
          check_pair(pi0, cert.gbar0, cert.g0, cert.tau_grid,
                     PairMode::StrictFamily, FreqPoint::zero(), tol);
      const IqcCheckReport rinf =
          check_pair(pi_inf, cert.gbarinf, cert.ginf, cert.tau_grid,
                     PairMode::StrictFamily, FreqPoint::infinity(), tol);
      if (r0.pass && rinf.pass) {
        cert.verdict = Verdict::StableForAllTau;
        cert.path = CertificatePath::ZeroGainProduct;
        cert.pi0 = std::move(pi0);
        cert.pi_inf = std::move(pi_inf);
        cert.reports = {r0, rinf};
        return cert;
      }
      cert.diagnostics.push_back(
          "vanishing-product endpoint checks failed; " +
          margin_note("at 0", r0) + "; " + margin_note("at inf", rinf));
    }
  }

  // General route: graph-symbol multipliers from both endpoints.
  const FeasibilityResult f0 =
      feasibility_at_point(cert.gbar0, cert.g0, MultiplierLabel::Pi0, tol);
  const FeasibilityResult finf = feasibility_at_point(
      cert.gbarinf, cert.ginf, MultiplierLabel::PiInf, tol);
  if (!f0.feasible || !finf.feasible) {
    const bool at_zero = !f0.feasible;
    const FeasibilityResult& f = at_zero ? f0 : finf;
    cert.verdict = Verdict::UnstableAlongHomotopy;
    cert.path = CertificatePath::EndpointInfeasible;
    cert.witness = HomotopyWitness{
        at_zero ? FreqPoint::zero() : FreqPoint::infinity(), *f.witness,
        *f.tau_star};
    cert.diagnostics.push_back(
        std::string("endpoint product at ") + (at_zero ? "0" : "inf") +
        " has a real eigenvalue " + std::to_string(f.witness->real()) +
        " >= 1: the family [tau G, Gbar] loses internal stability at tau = " +
        std::to_string(*f.tau_star) +
        "; this refutes stability of the whole homotopy family, not "
        "necessarily of the loop at tau = 1");
    if (!f0.feasible && !finf.feasible)
      cert.diagnostics.push_back(
          "the product at the other endpoint also crosses the real ray");
    return cert;
  }

  HermitianMultiplier pi0 = *f0.multiplier;
  HermitianMultiplier pi_inf = *finf.multiplier;
  const IqcCheckReport r0 =
      check_pair(pi0, cert.gbar0, cert.g0, cert.tau_grid,
                 PairMode::StrictFamily, FreqPoint::zero(), tol);
  const IqcCheckReport rinf =
      check_pair(pi_inf, cert.gbarinf, cert.ginf, cert.tau_grid,
                 PairMode::StrictFamily, FreqPoint::infinity(), tol);
  cert.reports = {r0, rinf};
  if (!r0.pass || !rinf.pass) {
    cert.verdict = Verdict::Inconclusive;
    cert.diagnostics.push_back(
        "graph-symbol endpoint checks failed numerically; " +
        margin_note("at 0", r0) + "; " + margin_note("at inf", rinf));
    return cert;
  }

  const BandStructureResult band =
      verify_band_structure(g, gbar, pi0, pi_inf, PairMode::StrictFamily,
                            cert.grid, cert.tau_grid, tol);
  cert.band = band.edges;
  cert.pi0 = std::move(pi0);
  cert.pi_inf = std::move(pi_inf);
  if (band.ok) {
    cert.verdict = Verdict::StableForAllTau;
    cert.path = CertificatePath::BandSplit;
    return cert;
  }
  cert.verdict = Verdict::Inconclusive;
  cert.band_gap = band.gap;
  cert.diagnostics.push_back(
      "three-band cover failed on (" + std::to_string(band.gap->lo) + ", " +
      std::to_string(band.gap->hi) +
      "): no multiplier certifies the interval");
  return cert;
}

StabilityCertificate user_multiplier_analyze(const TransferMatrix& g,
                                             const TransferMatrix& gbar,
                                             const CMat& pi0_raw,
                                             const CMat& pi_inf_raw,
                                             const AnalysisOptions& options) {
  if (g.rows() != gbar.rows() || g.cols() != gbar.cols() || !g.is_square())
    throw DimensionError("analysis requires square systems of equal size");
  const Tolerances& tol = options.tol;

  StabilityCertificate cert;
  cert.g_class = classify(g, options.grid, options.strict_ni_margin, tol);
  cert.gbar_class =
      classify(gbar, options.grid, options.strict_ni_margin, tol);
  if (!hypothesis_gate(cert)) return cert;
  if (!compute_endpoints(cert, g, gbar, tol)) return cert;

  const HermitianMultiplier pi0 =
      user_multiplier(pi0_raw, MultiplierLabel::Pi0, tol);
  const HermitianMultiplier pi_inf =
      user_multiplier(pi_inf_raw, MultiplierLabel::PiInf, tol);
  cert.tau_grid = uniform_tau_grid(options.tau_points);
  cert.grid = build_scan_grid(g, gbar, cert.g_class, cert.gbar_class, options);

  for (PairMode mode : {PairMode::StrictSingle, PairMode::StrictFamily}) {
    const IqcCheckReport r0 =
        check_pair(pi0, cert.gbar0, cert.g0, cert.tau_grid, mode,
                   FreqPoint::zero(), tol);
    const IqcCheckReport rinf =
        check_pair(pi_inf, cert.gbarinf, cert.ginf, cert.tau_grid, mode,
                   FreqPoint::infinity(), tol);
    if (!r0.pass || !rinf.pass) {
      cert.diagnostics.push_back(
          std::string("endpoint checks fail in ") + to_string(mode) +
          " orientation; " + margin_note("at 0", r0) + "; " +
          margin_note("at inf", rinf));
      cert.reports = {r0, rinf};
      continue;
    }
    const BandStructureResult band = verify_band_structure(
        g, gbar, pi0, pi_inf, mode, cert.grid, cert.tau_grid, tol);
    cert.reports = {r0, rinf};
    cert.band = band.edges;
    if (band.ok) {
      cert.verdict = Verdict::StableForAllTau;
      cert.path = CertificatePath::UserMultiplier;
      cert.pi0 = pi0;
      cert.pi_inf = pi_inf;
      return cert;
    }
    cert.band_gap = band.gap;
    cert.diagnostics.push_back(
        std::string("band cover fails in ") + to_string(mode) +
        " orientation on (" + std::to_string(band.gap->lo) + ", " +
        std::to_string(band.gap->hi) + ")");
  }
  cert.verdict = Verdict::Inconclusive;
  cert.pi0 = pi0;
  cert.pi_inf = pi_inf;
  return cert;
}

}
