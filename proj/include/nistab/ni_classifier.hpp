#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nistab/frequency_grid.hpp"
#include "nistab/transfer_matrix.hpp"
#include "nistab/types.hpp"

namespace nistab {

enum class NIVerdict { StrictlyNI, StableNI, NI, NotNI };

const char* to_string(NIVerdict v);

struct NIClassification {
  NIVerdict verdict = NIVerdict::NotNI;
  std::optional<double> witness_frequency;
  std::optional<double> witness_min_eig;
  PoleReport poles;
  FrequencyGrid grid;
  std::vector<double> defects;  // min eig of the NI form at grid.points[i]
  std::vector<std::string> diagnostics;

  bool is_ni() const { return verdict != NIVerdict::NotNI; }
  bool is_stable_ni() const {
    return verdict == NIVerdict::StableNI || verdict == NIVerdict::StrictlyNI;
  }
  bool is_strictly_ni() const { return verdict == NIVerdict::StrictlyNI; }
};

// The Hermitian matrix j(M(jw) - M(jw)*) whose nonnegativity at every w > 0
// defines the class.
CMat ni_form(const TransferMatrix& m, double omega, const Tolerances& tol = {});

// Smallest eigenvalue of ni_form; >= 0 means the defining inequality holds
// at omega.
double ni_defect(const TransferMatrix& m, double omega,
                 const Tolerances& tol = {});

// Pipeline: pole census (open-RHP pole, origin pole, or a repeated or
// non-PSD-residue axis pole rejects); then the NI form on an adaptive grid.
// No violation => NI; additionally no axis poles => StableNI; additionally
// defect >= strict_margin * w/(1+w^2) everywhere => StrictlyNI.
NIClassification classify(const TransferMatrix& m,
                          const GridOptions& grid_options = {},
                          double strict_margin = 1e-6,
                          const Tolerances& tol = {});

struct DetCondition {
  bool ok = false;
  double min_sigma = 0;
  double witness_omega = 0;  // grid point minimizing the smallest singular value
};

// Verifies the smallest singular value of M(jw) stays above the determinant
// floor across the grid. Meaningful for StrictlyNI systems, whose frequency
// response is nonsingular away from 0 and infinity.
DetCondition strict_det_condition(const TransferMatrix& m,
                                  const FrequencyGrid& grid,
                                  const Tolerances& tol = {});

}
