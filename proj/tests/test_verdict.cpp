#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <string>
#include <vector>

#include "doctest.h"
#include "nistab/errors.hpp"
#include "nistab/nyquist.hpp"
#include "nistab/report.hpp"
#include "nistab/verdict.hpp"

using namespace nistab;

namespace {

std::string fixture(const std::string& name) {
  return std::string(FIXTURES_DIR) + "/" + name;
}

StabilityCertificate run_fixture(const std::string& name) {
  const SystemFile sf = load_system_file(fixture(name));
  return sf.has_user_multipliers()
             ? user_multiplier_analyze(sf.g, sf.gbar, *sf.user_pi0,
                                       *sf.user_pi_inf, sf.options)
             : analyze(sf.g, sf.gbar, sf.options);
}

TransferMatrix scalar(std::vector<double> num, std::vector<double> den,
                      double delay = 0.0) {
  TransferMatrix m(1, 1);
  m.entry(0, 0).terms.emplace_back(Polynomial(std::move(num)),
                                   Polynomial(std::move(den)), delay);
  return m;
}

// Every certificate must satisfy the structural promises of its verdict.
void check_structure(const StabilityCertificate& cert) {
  if (cert.verdict == Verdict::StableForAllTau) {
    REQUIRE(cert.pi0.has_value());
    REQUIRE(cert.pi_inf.has_value());
    REQUIRE(!cert.reports.empty());
    for (const auto& r : cert.reports) CHECK(r.pass);
  }
  if (cert.verdict == Verdict::UnstableAlongHomotopy) {
    REQUIRE(cert.witness.has_value());
    CHECK(cert.witness->tau_star > 0.0);
    CHECK(cert.witness->tau_star <= 1.0);
  }
  if (cert.band) {
    if (!cert.band->low_anchored_only) CHECK(cert.band->omega_lo > 0.0);
    if (!cert.band->high_anchored_only)
      CHECK(cert.band->omega_hi < std::numeric_limits<double>::infinity());
    if (!cert.band->midband_empty && !cert.band->low_anchored_only &&
        !cert.band->high_anchored_only)
      CHECK(cert.band->omega_lo < cert.band->omega_hi);
  }
  REQUIRE(!cert.tau_grid.empty());
  CHECK(cert.tau_grid.front() == 0.0);
  CHECK(cert.tau_grid.back() == 1.0);
}

int oracle_winding(const SystemFile& sf, double tau) {
  ContourOverrides ov;
  ov.samples_axis = 2048;
  const ContourSpec spec = build_contour(sf.g, sf.gbar, ov, sf.options.tol);
  return winding_number(sf.g, sf.gbar, tau, spec, sf.options.tol).winding;
}

}  // namespace

TEST_CASE("delayed resonator family certifies through the marginal gain route") {
  for (const char* name :
       {"resonator_delay_T0.json", "resonator_delay_T0p1.json",
        "resonator_delay_T1.json", "resonator_delay_T10.json"}) {
    CAPTURE(name);
    const StabilityCertificate cert = run_fixture(name);
    CHECK(cert.verdict == Verdict::StableForAllTau);
    CHECK(cert.path == CertificatePath::GainBoundMarginal);
    CHECK(cert.sigma0 == doctest::Approx(0.8).epsilon(1e-12));
    CHECK(cert.sigmainf == 0.0);
    check_structure(cert);
    REQUIRE(cert.reports.size() == 2);
    CHECK(cert.reports[0].upper_margin ==
          doctest::Approx(0.36).epsilon(1e-10));
    CHECK(cert.reports[1].upper_margin == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(cert.g_class.verdict == NIVerdict::NI);
    CHECK(cert.gbar_class.verdict == NIVerdict::StrictlyNI);
  }
}

TEST_CASE("robotic arm: small load passes the plain gain route") {
  const StabilityCertificate cert = run_fixture("robotic_arm_delta1.json");
  CHECK(cert.verdict == Verdict::StableForAllTau);
  CHECK(cert.path == CertificatePath::GainBoundMarginal);
  CHECK(cert.sigma0 == doctest::Approx(6.52081849708647e-09).epsilon(1e-6));
  CHECK(cert.sigmainf == doctest::Approx(0.872008366932286).epsilon(1e-12));
  REQUIRE(cert.reports.size() == 2);
  CHECK(cert.reports[1].upper_margin ==
        doctest::Approx(0.239601408000088).epsilon(1e-9));
  check_structure(cert);
}

TEST_CASE("robotic arm: large load needs the supplied multipliers") {
  const StabilityCertificate cert = run_fixture("robotic_arm_delta10.json");
  CHECK(cert.verdict == Verdict::StableForAllTau);
  CHECK(cert.path == CertificatePath::UserMultiplier);
  CHECK(cert.sigmainf == doctest::Approx(3.0).epsilon(1e-9));
  REQUIRE(cert.band.has_value());
  CHECK(cert.band->omega_lo == doctest::Approx(3.3966).epsilon(1e-3));
  CHECK(cert.band->omega_hi ==
        doctest::Approx(11094.628943275211).epsilon(1e-9));
  CHECK(cert.band->mid_min_margin ==
        doctest::Approx(0.002049078578226482).epsilon(1e-9));
  check_structure(cert);
}

TEST_CASE("robotic arm large load also certifies without user multipliers") {
  SystemFile sf = load_system_file(fixture("robotic_arm_delta10.json"));
  sf.user_pi0.reset();
  sf.user_pi_inf.reset();
  const StabilityCertificate cert = analyze(sf.g, sf.gbar, sf.options);
  CHECK(cert.verdict == Verdict::StableForAllTau);
  CHECK(cert.path == CertificatePath::BandSplit);
  // The graph-symbol family's tau = 0 member at omega = 0 is
  // (I + B*B)^{-1} with ||B|| ~ 4e6: a genuinely definite certificate with
  // a margin near 6e-14 that a scale-blind floor would reject.
  REQUIRE(cert.reports.size() == 2);
  CHECK(cert.reports[0].upper_margin > 0.0);
  CHECK(cert.reports[0].upper_margin < 1e-10);
  CHECK(cert.reports[1].upper_margin ==
        doctest::Approx(0.91743119266055).epsilon(1e-9));
  REQUIRE(cert.band.has_value());
  CHECK(cert.band->omega_lo ==
        doctest::Approx(0.000503215935926).epsilon(1e-6));
  CHECK(cert.band->omega_hi == doctest::Approx(22175.05275253925).epsilon(1e-9));
  check_structure(cert);
}

TEST_CASE("endpoint ray crossing refutes the whole homotopy family") {
  const StabilityCertificate cert = run_fixture("unstable_tau_half.json");
  CHECK(cert.verdict == Verdict::UnstableAlongHomotopy);
  CHECK(cert.path == CertificatePath::EndpointInfeasible);
  REQUIRE(cert.witness.has_value());
  CHECK(cert.witness->frequency.kind == FreqPoint::Kind::Zero);
  CHECK(cert.witness->lambda.real() == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(std::abs(cert.witness->lambda.imag()) < 1e-9);
  CHECK(cert.witness->tau_star == doctest::Approx(0.5).epsilon(1e-9));
  check_structure(cert);

  // The oracle sees the instability appear past tau*.
  const SystemFile sf = load_system_file(fixture("unstable_tau_half.json"));
  CHECK(oracle_winding(sf, 0.45) == 0);
  CHECK(oracle_winding(sf, 0.55) == 1);
  CHECK(oracle_winding(sf, 1.0) == 1);
}

TEST_CASE("mixed-scale pair certifies through the three-band split") {
  const StabilityCertificate cert = run_fixture("mixed_scale.json");
  CHECK(cert.verdict == Verdict::StableForAllTau);
  CHECK(cert.path == CertificatePath::BandSplit);
  REQUIRE(cert.band.has_value());
  CHECK(cert.band->omega_lo == doctest::Approx(0.740754307284717).epsilon(1e-9));
  CHECK(cert.band->omega_hi ==
        doctest::Approx(1.2890675894140282).epsilon(1e-9));
  CHECK(cert.band->omega_lo < 1.0);
  CHECK(cert.band->omega_hi > 1.0);
  CHECK(cert.band->mid_min_margin ==
        doctest::Approx(0.9686064468698302).epsilon(1e-9));
  REQUIRE(cert.reports.size() == 2);
  CHECK(cert.reports[0].upper_margin == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(cert.reports[1].upper_margin == doctest::Approx(1.0).epsilon(1e-6));
  check_structure(cert);
}

TEST_CASE("uncovered band: strict side dies in its own rounding noise") {
  const StabilityCertificate cert = run_fixture("uncovered_band.json");
  CHECK(cert.verdict == Verdict::Inconclusive);
  CHECK(cert.path == CertificatePath::None);
  CHECK(cert.g_class.verdict == NIVerdict::StrictlyNI);
  CHECK(cert.gbar_class.verdict == NIVerdict::StrictlyNI);
  // Both endpoints certify, the midband cannot: the strictness of Gbar is
  // real in absolute terms but sits 14x below rounding noise relative to
  // its 1e9 scale, and the endpoint multipliers cover no interior point
  // against a coupling factor of 1 + sigma^2 ~ 1e18.
  REQUIRE(cert.reports.size() == 2);
  CHECK(cert.reports[0].pass);
  CHECK(cert.reports[1].pass);
  CHECK(cert.reports[0].upper_margin == doctest::Approx(0.1).epsilon(1e-9));
  CHECK(cert.reports[1].upper_margin == doctest::Approx(0.2).epsilon(1e-9));
  CHECK(cert.sigma0 == doctest::Approx(3e9).epsilon(1e-6));
  CHECK(cert.sigmainf == doctest::Approx(2e9).epsilon(1e-6));
  REQUIRE(cert.band_gap.has_value());
  CHECK(cert.band_gap->lo == 0.0);
  CHECK(std::isinf(cert.band_gap->hi));
  // The partial edges record that neither endpoint multiplier covered any
  // interior grid point against the 1e18 coupling factor.
  REQUIRE(cert.band.has_value());
  CHECK(cert.band->low_anchored_only);
  CHECK(cert.band->high_anchored_only);
  REQUIRE(!cert.diagnostics.empty());
}

TEST_CASE("hypothesis gate rejects non-NI and non-strict inputs") {
  SUBCASE("unstable G is not NI") {
    const StabilityCertificate cert =
        analyze(scalar({1.0}, {-1.0, 1.0}), scalar({1.0}, {1.0, 1.0}));
    CHECK(cert.verdict == Verdict::Inconclusive);
    CHECK(cert.path == CertificatePath::None);
    CHECK(cert.g_class.verdict == NIVerdict::NotNI);
    REQUIRE(!cert.diagnostics.empty());
  }
  SUBCASE("Gbar must be strictly NI, not merely NI") {
    // 1/(s+1)^2 is NI but its defect decays as 1/omega^3, under the strict
    // floor at high frequency.
    const StabilityCertificate cert =
        analyze(scalar({1.0}, {1.0, 1.0}), scalar({1.0}, {1.0, 2.0, 1.0}));
    CHECK(cert.verdict == Verdict::Inconclusive);
    CHECK(cert.gbar_class.verdict == NIVerdict::StableNI);
    REQUIRE(!cert.diagnostics.empty());
  }
}

TEST_CASE("plain gain route: strictly contractive endpoint products") {
  const TransferMatrix g = scalar({0.5}, {1.0, 1.0});
  const TransferMatrix gbar = scalar({1.0}, {2.0, 1.0});
  const StabilityCertificate cert = analyze(g, gbar);
  CHECK(cert.verdict == Verdict::StableForAllTau);
  CHECK(cert.path == CertificatePath::GainBound);
  CHECK(cert.sigma0 == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(cert.sigmainf == 0.0);
  REQUIRE(cert.reports.size() == 2);
  CHECK(cert.reports[0].upper_margin == doctest::Approx(0.9375).epsilon(1e-12));
  CHECK(cert.reports[1].upper_margin == doctest::Approx(1.0).epsilon(1e-12));
  check_structure(cert);

  // Gain-route success implies the graph-symbol route was available at both
  // endpoints: the certified pairs are ray-clear there.
  const Tolerances tol;
  CHECK(feasibility_at_point(cert.gbar0, cert.g0, MultiplierLabel::Pi0, tol)
            .feasible);
  CHECK(feasibility_at_point(cert.gbarinf, cert.ginf, MultiplierLabel::PiInf,
                             tol)
            .feasible);
}

TEST_CASE("vanishing product at infinity with contractive spectrum at zero") {
  // G = diag(1/(s+1), 0) meets Gbar = B/(s+1) with B = 3.6 v v' + 0.05 I:
  // the dc product's largest singular value 1.83 blocks the gain route, but
  // its spectral radius is 0.95 and the product at infinity vanishes.
  TransferMatrix g(2, 2);
  g.entry(0, 0).terms.emplace_back(Polynomial({1.0}), Polynomial({1.0, 1.0}));
  TransferMatrix gbar(2, 2);
  const double v0 = 0.5, v1 = 0.866;
  const double b00 = 3.6 * v0 * v0 + 0.05, b01 = 3.6 * v0 * v1;
  const double b11 = 3.6 * v1 * v1 + 0.05;
  gbar.entry(0, 0).terms.emplace_back(Polynomial({b00}),
                                      Polynomial({1.0, 1.0}));
  gbar.entry(0, 1).terms.emplace_back(Polynomial({b01}),
                                      Polynomial({1.0, 1.0}));
  gbar.entry(1, 0).terms.emplace_back(Polynomial({b01}),
                                      Polynomial({1.0, 1.0}));
  gbar.entry(1, 1).terms.emplace_back(Polynomial({b11}),
                                      Polynomial({1.0, 1.0}));

  const StabilityCertificate cert = analyze(g, gbar);
  CHECK(cert.verdict == Verdict::StableForAllTau);
  CHECK(cert.path == CertificatePath::ZeroGainProduct);
  CHECK(cert.sigma0 > 1.0);
  CHECK(cert.sigma0 == doctest::Approx(1.8255).epsilon(1e-3));
  CHECK(cert.sigmainf == 0.0);
  check_structure(cert);

  // Winding cross-check at full coupling.
  const ContourSpec spec = build_contour(g, gbar);
  CHECK(winding_number(g, gbar, 1.0, spec).winding == 0);
}

TEST_CASE("stable fixture verdicts agree with the winding oracle") {
  for (const char* name :
       {"resonator_delay_T1.json", "robotic_arm_delta1.json",
        "mixed_scale.json"}) {
    CAPTURE(name);
    const SystemFile sf = load_system_file(fixture(name));
    for (double tau : {0.1, 0.5, 1.0}) {
      CAPTURE(tau);
      CHECK(oracle_winding(sf, tau) == 0);
    }
  }
}

TEST_CASE("band structure reports the uncovered interval directly") {
  // G wanders through a resonance while Gbar is constant: the endpoint
  // multipliers hold only near their own ends and the midband multiplier
  // needs strictness Gbar does not have, so the middle stays uncovered.
  TransferMatrix g(1, 1);
  g.entry(0, 0).terms.emplace_back(Polynomial({1.0}), Polynomial({1.0, 1.0}));
  g.entry(0, 0).terms.emplace_back(Polynomial({0.9}),
                                   Polynomial({1.0, 0.1, 1.0}));
  const TransferMatrix gbar = scalar({0.4}, {1.0});

  const Tolerances tol;
  const CMat g0 = g.dc_gain(tol);
  const CMat ginf = g.inf_gain();
  const HermitianMultiplier pi0 =
      feasibility_multiplier(g0, MultiplierLabel::Pi0, tol);
  const HermitianMultiplier pi_inf =
      feasibility_multiplier(ginf, MultiplierLabel::PiInf, tol);

  GridOptions gopt;
  const FrequencyGrid grid = make_base_grid(gopt, {});
  const BandStructureResult band = verify_band_structure(
      g, gbar, pi0, pi_inf, PairMode::StrictFamily, grid,
      uniform_tau_grid(101), tol);
  CHECK(!band.ok);
  REQUIRE(band.gap.has_value());
  CHECK(band.gap->lo > 0.0);
  CHECK(band.gap->lo < 1.0);
  CHECK(band.gap->hi > 1.0);
  CHECK(band.gap->hi < 20.0);
  CHECK(!band.edges.low_anchored_only);
  CHECK(!band.edges.high_anchored_only);

  // The same scan with a strictly NI Gbar of the same dc data covers the
  // middle band and clears the structure check.
  const TransferMatrix strict_gbar = scalar({0.4}, {1.0, 1.0});
  const CMat sg0 = g.dc_gain(tol);
  const BandStructureResult ok_band = verify_band_structure(
      g, strict_gbar,
      feasibility_multiplier(sg0, MultiplierLabel::Pi0, tol),
      feasibility_multiplier(ginf, MultiplierLabel::PiInf, tol),
      PairMode::StrictFamily, grid, uniform_tau_grid(101), tol);
  CHECK(ok_band.ok);
  CHECK(!ok_band.gap.has_value());
}

TEST_CASE("analysis is deterministic") {
  const SystemFile sf = load_system_file(fixture("resonator_delay_T1.json"));
  const StabilityCertificate a = analyze(sf.g, sf.gbar, sf.options);
  const StabilityCertificate b = analyze(sf.g, sf.gbar, sf.options);
  REQUIRE(a.reports.size() == b.reports.size());
  for (std::size_t i = 0; i < a.reports.size(); ++i) {
    CHECK(a.reports[i].upper_margin == b.reports[i].upper_margin);
    CHECK(a.reports[i].lower_min == b.reports[i].lower_min);
  }
  CHECK(a.sigma0 == b.sigma0);
  CHECK(a.sigmainf == b.sigmainf);
}
