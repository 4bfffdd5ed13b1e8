#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nistab/linalg.hpp"
#include "nistab/types.hpp"

namespace nistab {

enum class MultiplierLabel { Pi0, PiInf, PiMid, Custom };

enum class MultiplierConstruction {
  GraphSymbol,       // projector built from the normalized graph symbol of B
  GainBound,         // diag(X*X, -I) endpoint gain comparison
  ZeroGainProduct,   // diag(-X*X, I) for vanishing endpoint products
  Passivity,         // [[0, I],[I, 0]]
  UserSupplied,
  Midband            // [[0, jI],[-jI, 0]]
};

const char* to_string(MultiplierLabel label);
const char* to_string(MultiplierConstruction c);

struct HermitianMultiplier {
  CMat matrix;  // 2n x 2n
  MultiplierLabel label = MultiplierLabel::Custom;
  MultiplierConstruction construction = MultiplierConstruction::UserSupplied;

  int block_dim() const { return static_cast<int>(matrix.rows()) / 2; }
};

// Which side of the complementary pair carries the strict inequality.
// StrictSingle: [Abar; I]*Pi[Abar; I] <= -eta I (single form strict),
//               [I; tau A]*Pi[I; tau A] >= 0 over the tau-grid.
// StrictFamily: [tau Abar; I]*Pi[tau Abar; I] >= eta I over the tau-grid,
//               [I; A]*Pi[I; A] <= 0 (single form non-strict).
enum class PairMode { StrictSingle, StrictFamily };

const char* to_string(PairMode mode);

// Frequency tag attached to a check: an endpoint or a grid value.
struct FreqPoint {
  enum class Kind { Zero, Infinity, Value };
  Kind kind = Kind::Value;
  double value = 0;

  static FreqPoint zero() { return {Kind::Zero, 0.0}; }
  static FreqPoint infinity() { return {Kind::Infinity, 0.0}; }
  static FreqPoint at(double omega) { return {Kind::Value, omega}; }
};

struct IqcCheckReport {
  bool pass = false;
  // Margin of the strict side: eta such that the strict form clears eta I
  // (sign-adjusted so positive is good).
  double upper_margin = 0;
  // Worst eigenvalue of the non-strict side, sign-adjusted so that values
  // >= -tol are acceptable: min over tau of min-eig for StrictSingle,
  // -max-eig of the single form for StrictFamily.
  double lower_min = 0;
  // Largest |eigenvalue| seen on each side; relative tolerances use these.
  double upper_scale = 0;
  double lower_scale = 0;
  std::vector<double> tau_grid;
  FreqPoint frequency;
  PairMode mode = PairMode::StrictSingle;
};

std::vector<double> uniform_tau_grid(int points);

// Graph-symbol projector of Lemma-style feasibility: with
// S = (I + B*B)^{-1/2} and Y = [-S B, S], returns Pi = Y* Y. Always PSD,
// rank n, and [I; B]*Pi[I; B] = 0 exactly in the algebra.
HermitianMultiplier feasibility_multiplier(const CMat& b,
                                           MultiplierLabel label,
                                           const Tolerances& tol = {});

// Pi_m = [[0, jI],[-jI, 0]]; satisfies
// [X; I]*Pi_m[X; I] = -j(X - X*) identically.
HermitianMultiplier midband_multiplier(int n);

// Pi_0 = diag(G0*G0, -I), Pi_inf = diag(Ginf*Ginf, -I): the endpoint gain
// comparison multipliers. StrictSingle check passes iff the largest singular
// value of the endpoint product is below 1.
std::pair<HermitianMultiplier, HermitianMultiplier> gain_multipliers(
    const CMat& g0, const CMat& ginf);

// Pi_inf = diag(-Ginf*Ginf, I) for the vanishing-product endpoint: with
// Gbar(inf) PSD and Ginf*Gbarinf = 0 the StrictFamily check passes with the
// single form exactly zero.
HermitianMultiplier zero_gain_product_multiplier(const CMat& ginf);

HermitianMultiplier passivity_multiplier(int n);

HermitianMultiplier user_multiplier(const CMat& pi, MultiplierLabel label,
                                    const Tolerances& tol = {});

// Evaluates the complementary pair at one frequency point on the tau-grid.
// Strict side passes when its margin clears the rounding noise of its own
// evaluation (machine epsilon times the larger of the form's magnitude and
// the magnitudes combined while assembling it), judged per tau-grid member
// for a family since members can differ in magnitude by many orders.
// Non-strict side passes when its worst eigenvalue stays above
// -tol.psd_rel * (1 + side scale). Reported margins and scales are the
// extremes over the whole family.
IqcCheckReport check_pair(const HermitianMultiplier& pi, const CMat& abar,
                          const CMat& a, const std::vector<double>& tau_grid,
                          PairMode mode, FreqPoint frequency = {},
                          const Tolerances& tol = {});

struct FeasibilityResult {
  bool feasible = false;
  std::optional<HermitianMultiplier> multiplier;
  std::optional<Complex> witness;
  std::optional<double> tau_star;
};

// Ray test on B*A against threshold 1; when clear, the graph-symbol
// multiplier of B certifies the pair, otherwise the crossing tau* = 1/lambda
// is reported.
FeasibilityResult feasibility_at_point(const CMat& a, const CMat& b,
                                       MultiplierLabel label,
                                       const Tolerances& tol = {});

struct BandPointCheck {
  bool pass = false;
  double strict_value = 0;  // margin of the strict side at this omega
  double other_value = 0;   // worst value of the coupled side
  double bound = 0;         // floor the coupled side must stay above/below
};

// Interior-band condition at omega: the strict side must clear its relative
// margin, and the other side may deviate from definiteness by strictly less
// than strict_margin / (1 + max_sv(gbar_w)^2). A singular I - tau*G*Gbar at
// this omega would violate the pair of quadratic-form bounds, so a pass
// certifies nonsingularity for every tau in [0, 1].
BandPointCheck band_point_check(const HermitianMultiplier& pi,
                                const CMat& gbar_w, const CMat& g_w,
                                const std::vector<double>& tau_grid,
                                PairMode mode, const Tolerances& tol = {});

}
