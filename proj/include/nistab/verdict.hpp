#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nistab/iqc.hpp"
#include "nistab/ni_classifier.hpp"
#include "nistab/transfer_matrix.hpp"

namespace nistab {

enum class Verdict { StableForAllTau, UnstableAlongHomotopy, Inconclusive };

// Which argument closed the case.
enum class CertificatePath {
  None,
  GainBound,           // endpoint gain products below 1, no axis poles
  GainBoundMarginal,   // same with simple axis poles carrying PD residues
  ZeroGainProduct,     // vanishing product at infinity, small gain at zero
  BandSplit,           // graph-symbol endpoints + three-band frequency cover
  UserMultiplier,      // caller-supplied endpoint multipliers + band cover
  EndpointInfeasible   // necessity: an endpoint product crosses the real ray
};

const char* to_string(Verdict v);
const char* to_string(CertificatePath p);

struct BandEdges {
  double omega_lo = 0;   // top of the certified low band (0 = endpoint only)
  double omega_hi = 0;   // bottom of the certified high band
  double mid_min_margin = 0;
  bool midband_empty = false;     // low and high bands overlap on the grid
  bool low_anchored_only = false;   // no interior point certified by pi0
  bool high_anchored_only = false;  // no interior point certified by pi_inf
};

struct BandGap {
  double lo = 0;
  double hi = 0;
};

struct HomotopyWitness {
  FreqPoint frequency;
  Complex lambda;
  double tau_star = 0;
};

struct StabilityCertificate {
  Verdict verdict = Verdict::Inconclusive;
  CertificatePath path = CertificatePath::None;
  NIClassification g_class;
  NIClassification gbar_class;
  std::optional<HermitianMultiplier> pi0;
  std::optional<HermitianMultiplier> pi_inf;
  std::vector<IqcCheckReport> reports;     // endpoint checks
  std::optional<BandEdges> band;
  std::optional<BandGap> band_gap;
  std::optional<HomotopyWitness> witness;
  std::optional<bool> oracle_agreement;
  std::vector<double> tau_grid;
  FrequencyGrid grid;                      // band-scan grid
  CMat g0, gbar0, ginf, gbarinf;
  double sigma0 = 0;    // max singular value of G(0)*Gbar(0)
  double sigmainf = 0;  // max singular value of G(inf)*Gbar(inf)
  std::vector<std::string> diagnostics;
};

struct AnalysisOptions {
  GridOptions grid;
  int tau_points = 101;
  double strict_ni_margin = 1e-6;
  Tolerances tol;
};

struct BandStructureResult {
  bool ok = false;
  BandEdges edges;
  std::optional<BandGap> gap;
};

// Three-band grid cover: pi0 certifies an initial run of grid points, pi_inf
// a final run, and the midband multiplier must certify every point between.
// Endpoint passes at 0 and infinity anchor the two outer bands by continuity.
BandStructureResult verify_band_structure(
    const TransferMatrix& g, const TransferMatrix& gbar,
    const HermitianMultiplier& pi0, const HermitianMultiplier& pi_inf,
    PairMode mode, const FrequencyGrid& grid,
    const std::vector<double>& tau_grid, const Tolerances& tol = {});

// Full decision sequence. Hypothesis gate: G must classify NI and Gbar
// StrictlyNI, else Inconclusive with diagnostics. Then, in order: endpoint
// gain products below 1 (axis-pole residues PD when present); the
// vanishing-product route; the general graph-symbol route with a band scan.
// An endpoint whose product crosses the real ray at or beyond 1 refutes
// stability of the whole homotopy family.
StabilityCertificate analyze(const TransferMatrix& g,
                             const TransferMatrix& gbar,
                             const AnalysisOptions& options = {});

// Same hypothesis gate, but both endpoint checks and the band scan run with
// the caller's multipliers. The strict-single orientation is tried first,
// then the strict-family orientation.
StabilityCertificate user_multiplier_analyze(const TransferMatrix& g,
                                             const TransferMatrix& gbar,
                                             const CMat& pi0, const CMat& pi_inf,
                                             const AnalysisOptions& options = {});

}
