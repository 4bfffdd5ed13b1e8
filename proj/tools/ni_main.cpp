#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nistab/errors.hpp"
#include "nistab/linalg.hpp"
#include "nistab/nyquist.hpp"
#include "nistab/report.hpp"
#include "nistab/version.hpp"

namespace {

using namespace nistab;

std::string fmt(double x) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

std::string describe(const NIClassification& c) {
  std::string out = to_string(c.verdict);
  if (!c.poles.axis.empty()) {
    out += " (axis pole omega=";
    for (std::size_t i = 0; i < c.poles.axis.size(); ++i) {
      if (i) out += ", ";
      out += fmt(c.poles.axis[i].omega0);
    }
    out += ")";
  }
  if (c.verdict == NIVerdict::NotNI && c.witness_frequency)
    out += " (violated at omega=" + fmt(*c.witness_frequency) +
           ", min eig " + fmt(*c.witness_min_eig) + ")";
  return out;
}

int cmd_classify(const std::string& path, const std::string& json_out) {
  const SystemFile sf = load_system_file(path);
  const NIClassification gc =
      classify(sf.g, sf.options.grid, sf.options.strict_ni_margin,
               sf.options.tol);
  const NIClassification bc =
      classify(sf.gbar, sf.options.grid, sf.options.strict_ni_margin,
               sf.options.tol);
  std::cout << "G: " << describe(gc) << "\n";
  std::cout << "Gbar: " << describe(bc) << "\n";
  for (const auto& d : gc.diagnostics) std::cout << "G: " << d << "\n";
  for (const auto& d : bc.diagnostics) std::cout << "Gbar: " << d << "\n";
  if (!json_out.empty()) {
    Json j{{"tool", Json{{"name", tool_name}, {"version", tool_version}}},
           {"input", sf.raw},
           {"G", classification_to_json(gc)},
           {"Gbar", classification_to_json(bc)}};
    write_json_file(json_out, j);
  }
  return gc.is_ni() && bc.is_strictly_ni() ? 0 : 2;
}

Json run_oracle(const SystemFile& sf, StabilityCertificate& cert) {
  Json out;
  out["checks"] = Json::array();
  ContourSpec contour;
  try {
    contour = build_contour(sf.g, sf.gbar, {}, sf.options.tol);
  } catch (const Error& e) {
    out["error"] = e.what();
    out["agreement"] = nullptr;
    return out;
  }
  Json cj{{"epsilon", contour.epsilon},
          {"arc_radius", contour.arc_radius},
          {"indent_points", contour.indent_points}};
  out["contour"] = cj;

  std::vector<double> taus;
  if (cert.verdict == Verdict::StableForAllTau)
    taus = {0.25, 0.5, 0.75, 1.0};
  else if (cert.verdict == Verdict::UnstableAlongHomotopy && cert.witness)
    taus = {std::min(1.0, cert.witness->tau_star + 0.05), 1.0};
  else
    taus = {1.0};
  taus.erase(std::unique(taus.begin(), taus.end()), taus.end());

  int nonzero = 0, zero = 0, boundary = 0, failures = 0;
  for (double tau : taus) {
    Json check{{"tau", tau}};
    try {
      const WindingResult w =
          winding_number(sf.g, sf.gbar, tau, contour, sf.options.tol);
      check["winding"] = w.winding;
      check["min_abs_det"] = w.min_abs_det;
      check["arc_deviation"] = w.arc_deviation;
      for (const auto& d : w.diagnostics) check["diagnostics"].push_back(d);
      (w.winding == 0 ? zero : nonzero) += 1;
    } catch (const ContourZeroError& e) {
      check["error"] = std::string("contour zero: ") + e.what();
      ++boundary;
    } catch (const Error& e) {
      check["error"] = e.what();
      ++failures;
    }
    out["checks"].push_back(std::move(check));
  }

  std::optional<bool> agreement;
  if (cert.verdict == Verdict::StableForAllTau) {
    if (nonzero > 0 || boundary > 0)
      agreement = false;
    else if (failures == 0)
      agreement = true;
  } else if (cert.verdict == Verdict::UnstableAlongHomotopy) {
    if (nonzero > 0)
      agreement = true;
    else if (zero > 0 && failures == 0 && boundary == 0)
      agreement = false;
  }
  if (agreement) {
    cert.oracle_agreement = *agreement;
    out["agreement"] = *agreement;
  } else {
    out["agreement"] = nullptr;
  }
  return out;
}

void print_certificate(const StabilityCertificate& cert) {
  std::cout << "verdict: " << to_string(cert.verdict) << "\n";
  std::cout << "path: " << to_string(cert.path) << "\n";
  std::cout << "G: " << describe(cert.g_class)
            << "\nGbar: " << describe(cert.gbar_class) << "\n";
  if (cert.g0.size() > 0) {
    std::cout << "max sv of G(0)Gbar(0): " << fmt(cert.sigma0)
              << ", of G(inf)Gbar(inf): " << fmt(cert.sigmainf) << "\n";
  }
  for (const auto& r : cert.reports) {
    const char* at = r.frequency.kind == FreqPoint::Kind::Zero ? "0" : "inf";
    std::cout << "endpoint check at " << at << " (" << to_string(r.mode)
              << "): " << (r.pass ? "pass" : "fail") << ", strict margin "
              << fmt(r.upper_margin) << ", non-strict min "
              << fmt(r.lower_min) << "\n";
  }
  if (cert.band) {
    if (cert.band->midband_empty) {
      std::cout << "band: low and high multiplier bands overlap; no midband"
                << "\n";
    } else {
      std::cout << "band: low up to omega=" << fmt(cert.band->omega_lo)
                << ", high from omega=" << fmt(cert.band->omega_hi)
                << ", midband min margin " << fmt(cert.band->mid_min_margin)
                << "\n";
    }
  }
  if (cert.band_gap)
    std::cout << "uncovered band: (" << fmt(cert.band_gap->lo) << ", "
              << fmt(cert.band_gap->hi) << ")\n";
  if (cert.witness) {
    const char* at =
        cert.witness->frequency.kind == FreqPoint::Kind::Zero ? "0" : "inf";
    std::cout << "witness: eigenvalue " << fmt(cert.witness->lambda.real())
              << " of the endpoint product at " << at
              << "; loop becomes singular at tau* = "
              << fmt(cert.witness->tau_star) << "\n";
  }
  if (cert.oracle_agreement)
    std::cout << "oracle agreement: " << (*cert.oracle_agreement ? "true" : "false")
              << "\n";
  for (const auto& d : cert.diagnostics) std::cout << "note: " << d << "\n";
}

int cmd_analyze(const std::string& path, bool oracle,
                const std::string& json_out, int tau_points, double grid_lo,
                double grid_hi, const std::string& contour_csv) {
  SystemFile sf = load_system_file(path);
  if (tau_points > 0) sf.options.tau_points = tau_points;
  if (grid_lo > 0) sf.options.grid.lo = grid_lo;
  if (grid_hi > 0) sf.options.grid.hi = grid_hi;
  if (!(sf.options.grid.lo < sf.options.grid.hi))
    throw SchemaError("--grid-lo must be below --grid-hi");

  StabilityCertificate cert =
      sf.has_user_multipliers()
          ? user_multiplier_analyze(sf.g, sf.gbar, *sf.user_pi0,
                                    *sf.user_pi_inf, sf.options)
          : analyze(sf.g, sf.gbar, sf.options);

  Json oracle_json = nullptr;
  if (oracle) oracle_json = run_oracle(sf, cert);

  if (!contour_csv.empty()) {
    const ContourSpec contour = build_contour(sf.g, sf.gbar, {}, sf.options.tol);
    const WindingResult w =
        winding_number(sf.g, sf.gbar, 1.0, contour, sf.options.tol);
    std::ofstream os(contour_csv);
    if (!os) throw Error("cannot write \"" + contour_csv + "\"");
    write_contour_csv(os, w);
  }

  print_certificate(cert);
  if (!json_out.empty()) {
    Json j = certificate_to_json(cert, sf);
    j["oracle"] = oracle_json;
    write_json_file(json_out, j);
  }
  switch (cert.verdict) {
    case Verdict::StableForAllTau: return 0;
    case Verdict::UnstableAlongHomotopy: return 3;
    case Verdict::Inconclusive: return 4;
  }
  return 4;
}

int cmd_sweep(const std::string& path, const std::string& what,
              const std::string& csv_out, double grid_lo, double grid_hi) {
  const SystemFile sf = load_system_file(path);
  GridOptions go = sf.options.grid;
  if (grid_lo > 0) go.lo = grid_lo;
  if (grid_hi > 0) go.hi = grid_hi;
  go.delay_present = sf.g.has_delay() || sf.gbar.has_delay();
  const Tolerances& tol = sf.options.tol;

  std::vector<double> axis;
  for (const auto& p : sf.g.find_poles(tol).axis) axis.push_back(p.omega0);
  for (const auto& p : sf.gbar.find_poles(tol).axis) axis.push_back(p.omega0);
  const FrequencyGrid grid = make_base_grid(go, axis);

  std::ofstream os(csv_out);
  if (!os) throw Error("cannot write \"" + csv_out + "\"");

  if (what == "ni-defect") {
    os << "omega,g_ni_defect,gbar_ni_defect\n";
    for (double w : grid.points)
      os << fmt(w) << ',' << fmt(ni_defect(sf.g, w, tol)) << ','
         << fmt(ni_defect(sf.gbar, w, tol)) << '\n';
  } else if (what == "singvals") {
    os << "omega,g_sigma_min,g_sigma_max,gbar_sigma_min,gbar_sigma_max\n";
    for (double w : grid.points) {
      const auto sg = svd_extremes(sf.g.evaluate(Complex(0, w), tol));
      const auto sb = svd_extremes(sf.gbar.evaluate(Complex(0, w), tol));
      os << fmt(w) << ',' << fmt(sg.first) << ',' << fmt(sg.second) << ','
         << fmt(sb.first) << ',' << fmt(sb.second) << '\n';
    }
  } else {  // det
    if (!sf.g.is_square() || sf.g.rows() != sf.gbar.rows() ||
        sf.g.cols() != sf.gbar.cols())
      throw SchemaError("det sweep requires square systems of equal size");
    os << "omega,abs_det\n";
    const CMat eye = CMat::Identity(sf.g.rows(), sf.g.cols());
    for (double w : grid.points) {
      const CMat m = eye - sf.g.evaluate(Complex(0, w), tol) *
                               sf.gbar.evaluate(Complex(0, w), tol);
      os << fmt(w) << ',' << fmt(std::abs(m.determinant())) << '\n';
    }
  }
  if (!os) throw Error("short write to \"" + csv_out + "\"");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"robust stability analysis of negative-imaginary feedback "
               "interconnections"};
  app.set_version_flag("--version", std::string(tool_version));
  app.require_subcommand(1);

  std::string file, json_out, csv_out, contour_csv, what;
  bool oracle = false;
  int tau_points = 0;
  double grid_lo = 0, grid_hi = 0;

  CLI::App* cls = app.add_subcommand(
      "classify", "classify both systems against the NI class hierarchy");
  cls->add_option("file", file, "problem description (JSON)")->required();
  cls->add_option("--json", json_out, "write the classification report here");

  CLI::App* ana = app.add_subcommand(
      "analyze", "decide robust closed-loop stability over tau in [0, 1]");
  ana->add_option("file", file, "problem description (JSON)")->required();
  ana->add_flag("--oracle", oracle,
                "cross-check the verdict with contour winding numbers");
  ana->add_option("--json", json_out, "write the full certificate here");
  ana->add_option("--tau-points", tau_points, "homotopy grid size");
  ana->add_option("--grid-lo", grid_lo, "frequency grid lower edge");
  ana->add_option("--grid-hi", grid_hi, "frequency grid upper edge");
  ana->add_option("--contour-csv", contour_csv,
                  "write the tau = 1 winding contour samples here");

  CLI::App* sw = app.add_subcommand("sweep", "tabulate frequency data as CSV");
  sw->add_option("file", file, "problem description (JSON)")->required();
  sw->add_option("--what", what, "ni-defect, det, or singvals")
      ->required()
      ->check(CLI::IsMember({"ni-defect", "det", "singvals"}));
  sw->add_option("--csv", csv_out, "output file")->required();
  sw->add_option("--grid-lo", grid_lo, "frequency grid lower edge");
  sw->add_option("--grid-hi", grid_hi, "frequency grid upper edge");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (cls->parsed()) return cmd_classify(file, json_out);
    if (ana->parsed())
      return cmd_analyze(file, oracle, json_out, tau_points, grid_lo, grid_hi,
                         contour_csv);
    return cmd_sweep(file, what, csv_out, grid_lo, grid_hi);
  } catch (const SchemaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
