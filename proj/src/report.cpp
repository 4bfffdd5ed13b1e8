#include "nistab/report.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "nistab/errors.hpp"
#include "nistab/version.hpp"

namespace nistab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw SchemaError(where + ": " + what);
}

const Json& expect_object(const Json& j, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  return j;
}

const Json& expect_array(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  return j;
}

void check_keys(const Json& j, std::initializer_list<const char*> allowed,
                const std::string& where) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (const char* key : allowed)
      if (it.key() == key) {
        known = true;
        break;
      }
    if (!known) fail(where, "unknown key \"" + it.key() + "\"");
  }
}

double get_double(const Json& j, const std::string& where) {
  if (!j.is_number()) fail(where, "expected a number");
  return j.get<double>();
}

double opt_double(const Json& j, const char* key, double fallback,
                  const std::string& where) {
  if (!j.contains(key)) return fallback;
  return get_double(j.at(key), where + "." + key);
}

int get_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<int>();
}

std::vector<double> get_double_array(const Json& j, const std::string& where) {
  expect_array(j, where);
  std::vector<double> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(get_double(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

Json real_grid_to_json(const std::vector<double>& v) {
  Json a = Json::array();
  for (double x : v) a.push_back(x);
  return a;
}

Json finite_or_null(double x) {
  if (std::isfinite(x)) return x;
  return nullptr;
}

double finite_from(const Json& j, const std::string& where) {
  if (j.is_null()) return kInf;
  return get_double(j, where);
}

Json complex_to_json(Complex z) { return Json{z.real(), z.imag()}; }

[[maybe_unused]] Complex complex_from_json(const Json& j,
                                           const std::string& where) {
  if (!j.is_array() || j.size() != 2) fail(where, "expected [re, im]");
  return {get_double(j[0], where + "[0]"), get_double(j[1], where + "[1]")};
}

Json freq_to_json(const FreqPoint& f) {
  switch (f.kind) {
    case FreqPoint::Kind::Zero: return Json{{"kind", "zero"}};
    case FreqPoint::Kind::Infinity: return Json{{"kind", "infinity"}};
    case FreqPoint::Kind::Value:
      return Json{{"kind", "value"}, {"omega", f.value}};
  }
  return Json{{"kind", "value"}, {"omega", f.value}};
}

FreqPoint freq_from_json(const Json& j, const std::string& where) {
  expect_object(j, where);
  const std::string kind = j.value("kind", "");
  if (kind == "zero") return FreqPoint::zero();
  if (kind == "infinity") return FreqPoint::infinity();
  if (kind == "value")
    return FreqPoint::at(get_double(j.at("omega"), where + ".omega"));
  fail(where, "unknown frequency kind \"" + kind + "\"");
}

PairMode mode_from_string(const std::string& s, const std::string& where) {
  if (s == "strict_single") return PairMode::StrictSingle;
  if (s == "strict_family") return PairMode::StrictFamily;
  fail(where, "unknown pair mode \"" + s + "\"");
}

MultiplierLabel label_from_string(const std::string& s,
                                  const std::string& where) {
  if (s == "pi0") return MultiplierLabel::Pi0;
  if (s == "pi_inf") return MultiplierLabel::PiInf;
  if (s == "pi_mid") return MultiplierLabel::PiMid;
  if (s == "custom") return MultiplierLabel::Custom;
  fail(where, "unknown multiplier label \"" + s + "\"");
}

MultiplierConstruction construction_from_string(const std::string& s,
                                                const std::string& where) {
  if (s == "graph_symbol") return MultiplierConstruction::GraphSymbol;
  if (s == "gain_bound") return MultiplierConstruction::GainBound;
  if (s == "zero_gain_product") return MultiplierConstruction::ZeroGainProduct;
  if (s == "passivity") return MultiplierConstruction::Passivity;
  if (s == "user_supplied") return MultiplierConstruction::UserSupplied;
  if (s == "midband") return MultiplierConstruction::Midband;
  fail(where, "unknown multiplier construction \"" + s + "\"");
}

Json check_to_json(const IqcCheckReport& r) {
  return Json{{"frequency", freq_to_json(r.frequency)},
              {"mode", to_string(r.mode)},
              {"pass", r.pass},
              {"upper_margin", r.upper_margin},
              {"lower_min", r.lower_min},
              {"upper_scale", r.upper_scale},
              {"lower_scale", r.lower_scale}};
}

Json multiplier_to_json(const HermitianMultiplier& m) {
  return Json{{"label", to_string(m.label)},
              {"construction", to_string(m.construction)},
              {"matrix", matrix_to_json(m.matrix)}};
}

HermitianMultiplier multiplier_from_json(const Json& j,
                                         const std::string& where) {
  expect_object(j, where);
  HermitianMultiplier m;
  m.matrix = matrix_from_json(j.at("matrix"), where + ".matrix");
  m.label = label_from_string(j.value("label", "custom"), where + ".label");
  m.construction = construction_from_string(
      j.value("construction", "user_supplied"), where + ".construction");
  return m;
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open \"" + path + "\"");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write \"" + path + "\"");
  out << j.dump(2) << '\n';
  if (!out) throw Error("short write to \"" + path + "\"");
}

Json matrix_to_json(const CMat& m) {
  Json re = Json::array();
  Json im = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json re_row = Json::array();
    Json im_row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      re_row.push_back(m(r, c).real());
      im_row.push_back(m(r, c).imag());
    }
    re.push_back(std::move(re_row));
    im.push_back(std::move(im_row));
  }
  return Json{{"re", std::move(re)}, {"im", std::move(im)}};
}

CMat matrix_from_json(const Json& j, const std::string& where) {
  expect_object(j, where);
  check_keys(j, {"re", "im"}, where);
  if (!j.contains("re")) fail(where, "missing \"re\"");
  const Json& re = expect_array(j.at("re"), where + ".re");
  const std::size_t rows = re.size();
  if (rows == 0) return CMat(0, 0);
  const std::size_t cols =
      expect_array(re[0], where + ".re[0]").size();
  CMat m = CMat::Zero(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string rw = where + ".re[" + std::to_string(r) + "]";
    const Json& row = expect_array(re[r], rw);
    if (row.size() != cols) fail(rw, "ragged matrix");
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = get_double(row[c], rw + "[" + std::to_string(c) + "]");
  }
  if (j.contains("im")) {
    const Json& im = expect_array(j.at("im"), where + ".im");
    if (im.size() != rows) fail(where + ".im", "row count differs from re");
    for (std::size_t r = 0; r < rows; ++r) {
      const std::string rw = where + ".im[" + std::to_string(r) + "]";
      const Json& row = expect_array(im[r], rw);
      if (row.size() != cols) fail(rw, "ragged matrix");
      for (std::size_t c = 0; c < cols; ++c)
        m(r, c) += Complex(0.0, get_double(row[c],
                                           rw + "[" + std::to_string(c) + "]"));
    }
  }
  return m;
}

Json system_to_json(const TransferMatrix& m) {
  Json entries = Json::array();
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) {
      const ScalarTF& e = m.entry(r, c);
      if (e.is_zero()) continue;
      Json terms = Json::array();
      for (const auto& t : e.terms) {
        Json term{{"num", real_grid_to_json(t.num().coeffs())},
                  {"den", real_grid_to_json(t.den().coeffs())}};
        if (t.delay() != 0.0) term["delay"] = t.delay();
        terms.push_back(std::move(term));
      }
      entries.push_back(
          Json{{"row", r}, {"col", c}, {"terms", std::move(terms)}});
    }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

TransferMatrix system_from_json(const Json& j, const std::string& where) {
  expect_object(j, where);
  check_keys(j, {"rows", "cols", "entries"}, where);
  if (!j.contains("rows") || !j.contains("cols"))
    fail(where, "missing \"rows\" or \"cols\"");
  const int rows = get_int(j.at("rows"), where + ".rows");
  const int cols = get_int(j.at("cols"), where + ".cols");
  if (rows < 1 || cols < 1) fail(where, "rows and cols must be positive");
  TransferMatrix m(rows, cols);
  if (!j.contains("entries")) return m;
  const Json& entries = expect_array(j.at("entries"), where + ".entries");
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const std::string ew = where + ".entries[" + std::to_string(k) + "]";
    const Json& entry = expect_object(entries[k], ew);
    check_keys(entry, {"row", "col", "terms"}, ew);
    if (!entry.contains("row") || !entry.contains("col") ||
        !entry.contains("terms"))
      fail(ew, "entry needs \"row\", \"col\" and \"terms\"");
    const int r = get_int(entry.at("row"), ew + ".row");
    const int c = get_int(entry.at("col"), ew + ".col");
    if (r < 0 || r >= rows || c < 0 || c >= cols)
      fail(ew, "index out of range");
    const Json& terms = expect_array(entry.at("terms"), ew + ".terms");
    for (std::size_t t = 0; t < terms.size(); ++t) {
      const std::string tw = ew + ".terms[" + std::to_string(t) + "]";
      const Json& term = expect_object(terms[t], tw);
      check_keys(term, {"num", "den", "delay"}, tw);
      if (!term.contains("num") || !term.contains("den"))
        fail(tw, "term needs \"num\" and \"den\"");
      const std::vector<double> num =
          get_double_array(term.at("num"), tw + ".num");
      const std::vector<double> den =
          get_double_array(term.at("den"), tw + ".den");
      const double delay = opt_double(term, "delay", 0.0, tw);
      try {
        m.entry(r, c).terms.emplace_back(Polynomial(num), Polynomial(den),
                                         delay);
      } catch (const SchemaError& e) {
        fail(tw, e.what());
      }
    }
  }
  return m;
}

SystemFile parse_system_file(const Json& j) {
  expect_object(j, "$");
  check_keys(j, {"G", "Gbar", "options"}, "$");
  if (!j.contains("G") || !j.contains("Gbar"))
    fail("$", "missing \"G\" or \"Gbar\"");

  SystemFile file;
  file.raw = j;
  file.g = system_from_json(j.at("G"), "$.G");
  file.gbar = system_from_json(j.at("Gbar"), "$.Gbar");

  if (!j.contains("options")) return file;
  const Json& opt = expect_object(j.at("options"), "$.options");
  check_keys(opt,
             {"grid", "tau_points", "strict_ni_margin", "tolerances",
              "user_multipliers"},
             "$.options");

  if (opt.contains("grid")) {
    const Json& g = expect_object(opt.at("grid"), "$.options.grid");
    check_keys(g, {"lo", "hi", "base_points", "refine_levels", "puncture_rel"},
               "$.options.grid");
    GridOptions& go = file.options.grid;
    go.lo = opt_double(g, "lo", go.lo, "$.options.grid");
    go.hi = opt_double(g, "hi", go.hi, "$.options.grid");
    if (g.contains("base_points"))
      go.base_points =
          get_int(g.at("base_points"), "$.options.grid.base_points");
    if (g.contains("refine_levels"))
      go.refine_levels =
          get_int(g.at("refine_levels"), "$.options.grid.refine_levels");
    go.puncture_rel =
        opt_double(g, "puncture_rel", go.puncture_rel, "$.options.grid");
    if (!(go.lo > 0) || !(go.hi > go.lo) || go.base_points < 2 ||
        go.refine_levels < 0 || !(go.puncture_rel > 0))
      fail("$.options.grid", "invalid grid parameters");
  }
  if (opt.contains("tau_points")) {
    file.options.tau_points =
        get_int(opt.at("tau_points"), "$.options.tau_points");
    if (file.options.tau_points < 2)
      fail("$.options.tau_points", "need at least two homotopy points");
  }
  file.options.strict_ni_margin =
      opt_double(opt, "strict_ni_margin", file.options.strict_ni_margin,
                 "$.options");
  if (opt.contains("tolerances")) {
    const Json& t = expect_object(opt.at("tolerances"), "$.options.tolerances");
    check_keys(t,
               {"axis_pole_rel", "pole_proximity", "psd_rel", "strict_rel",
                "hermitian_defect", "inv_sqrt_residual", "det_floor", "ray_re",
                "ray_im", "strict_ni_margin"},
               "$.options.tolerances");
    Tolerances& tol = file.options.tol;
    const std::string w = "$.options.tolerances";
    tol.axis_pole_rel = opt_double(t, "axis_pole_rel", tol.axis_pole_rel, w);
    tol.pole_proximity = opt_double(t, "pole_proximity", tol.pole_proximity, w);
    tol.psd_rel = opt_double(t, "psd_rel", tol.psd_rel, w);
    tol.strict_rel = opt_double(t, "strict_rel", tol.strict_rel, w);
    tol.hermitian_defect =
        opt_double(t, "hermitian_defect", tol.hermitian_defect, w);
    tol.inv_sqrt_residual =
        opt_double(t, "inv_sqrt_residual", tol.inv_sqrt_residual, w);
    tol.det_floor = opt_double(t, "det_floor", tol.det_floor, w);
    tol.ray_re = opt_double(t, "ray_re", tol.ray_re, w);
    tol.ray_im = opt_double(t, "ray_im", tol.ray_im, w);
    tol.strict_ni_margin =
        opt_double(t, "strict_ni_margin", tol.strict_ni_margin, w);
  }
  if (opt.contains("user_multipliers")) {
    const Json& um =
        expect_object(opt.at("user_multipliers"), "$.options.user_multipliers");
    check_keys(um, {"pi0", "pi_inf"}, "$.options.user_multipliers");
    if (!um.contains("pi0") || !um.contains("pi_inf"))
      fail("$.options.user_multipliers", "need both \"pi0\" and \"pi_inf\"");
    file.user_pi0 =
        matrix_from_json(um.at("pi0"), "$.options.user_multipliers.pi0");
    file.user_pi_inf =
        matrix_from_json(um.at("pi_inf"), "$.options.user_multipliers.pi_inf");
  }
  return file;
}

SystemFile load_system_file(const std::string& path) {
  return parse_system_file(read_json_file(path));
}

Json classification_to_json(const NIClassification& c) {
  Json axis = Json::array();
  for (const auto& p : c.poles.axis)
    axis.push_back(Json{{"omega0", p.omega0},
                        {"simple", p.simple},
                        {"residue", matrix_to_json(p.residue)},
                        {"residue_hermitian_defect",
                         p.residue_hermitian_defect}});
  Json rhp = Json::array();
  for (Complex z : c.poles.open_rhp) rhp.push_back(complex_to_json(z));
  Json j{{"verdict", to_string(c.verdict)},
         {"poles",
          Json{{"open_rhp", std::move(rhp)},
               {"axis", std::move(axis)},
               {"open_lhp_count", c.poles.open_lhp_count},
               {"origin_pole", c.poles.origin_pole},
               {"diagnostics", c.poles.diagnostics}}},
         {"grid_points", c.grid.points.size()},
         {"diagnostics", c.diagnostics}};
  j["witness_frequency"] =
      c.witness_frequency ? Json(*c.witness_frequency) : Json(nullptr);
  j["witness_min_eig"] =
      c.witness_min_eig ? Json(*c.witness_min_eig) : Json(nullptr);
  return j;
}

Json certificate_to_json(const StabilityCertificate& cert,
                         const SystemFile& input) {
  Json checks = Json::array();
  for (const auto& r : cert.reports) checks.push_back(check_to_json(r));

  Json punctured = Json::array();
  for (const auto& [lo, hi] : cert.grid.punctured)
    punctured.push_back(Json{lo, hi});

  Json j{{"tool", Json{{"name", tool_name}, {"version", tool_version}}},
         {"input", input.raw},
         {"classification", Json{{"G", classification_to_json(cert.g_class)},
                                 {"Gbar",
                                  classification_to_json(cert.gbar_class)}}},
         {"verdict", to_string(cert.verdict)},
         {"certificate_path", to_string(cert.path)},
         {"endpoint_checks", std::move(checks)},
         {"tau_grid", real_grid_to_json(cert.tau_grid)},
         {"grid", Json{{"points", real_grid_to_json(cert.grid.points)},
                       {"punctured", std::move(punctured)},
                       {"refinements", cert.grid.refinement_log.size()}}},
         {"diagnostics", cert.diagnostics},
         {"oracle", nullptr}};

  if (cert.g0.size() > 0)
    j["endpoints"] = Json{{"g0", matrix_to_json(cert.g0)},
                          {"gbar0", matrix_to_json(cert.gbar0)},
                          {"ginf", matrix_to_json(cert.ginf)},
                          {"gbarinf", matrix_to_json(cert.gbarinf)},
                          {"sigma0", cert.sigma0},
                          {"sigmainf", cert.sigmainf}};
  else
    j["endpoints"] = nullptr;

  j["multipliers"] =
      Json{{"pi0", cert.pi0 ? multiplier_to_json(*cert.pi0) : Json(nullptr)},
           {"pi_inf",
            cert.pi_inf ? multiplier_to_json(*cert.pi_inf) : Json(nullptr)}};

  if (cert.band) {
    j["band"] = Json{{"omega_lo", cert.band->omega_lo},
                     {"omega_hi", finite_or_null(cert.band->omega_hi)},
                     {"mid_min_margin",
                      finite_or_null(cert.band->mid_min_margin)},
                     {"midband_empty", cert.band->midband_empty},
                     {"low_anchored_only", cert.band->low_anchored_only},
                     {"high_anchored_only", cert.band->high_anchored_only}};
  } else {
    j["band"] = nullptr;
  }
  if (cert.band_gap)
    j["band_gap"] = Json{{"lo", cert.band_gap->lo},
                         {"hi", finite_or_null(cert.band_gap->hi)}};
  else
    j["band_gap"] = nullptr;
  if (cert.witness)
    j["witness"] = Json{{"frequency", freq_to_json(cert.witness->frequency)},
                        {"lambda", complex_to_json(cert.witness->lambda)},
                        {"tau_star", cert.witness->tau_star}};
  else
    j["witness"] = nullptr;
  if (cert.oracle_agreement) j["oracle_agreement"] = *cert.oracle_agreement;
  return j;
}

namespace {

struct ReplayContext {
  ReplayResult result;

  void mismatch(const std::string& what) {
    result.ok = false;
    result.mismatches.push_back(what);
  }

  void compare(const std::string& what, double stored, double computed) {
    if (std::isinf(stored) && std::isinf(computed) && stored == computed)
      return;
    const double dev =
        std::abs(stored - computed) / (1.0 + std::abs(stored));
    result.max_margin_deviation =
        std::max(result.max_margin_deviation, dev);
    if (!(dev <= 1e-12))
      mismatch(what + ": stored " + std::to_string(stored) + " recomputed " +
               std::to_string(computed));
  }
};

}  // namespace

ReplayResult replay_verify(const Json& report) {
  ReplayContext ctx;
  ctx.result.ok = true;

  const std::string where = "$.report";
  expect_object(report, where);
  const SystemFile input = parse_system_file(report.at("input"));
  const Tolerances& tol = input.options.tol;

  if (report.at("endpoints").is_null()) {
    if (!report.at("endpoint_checks").empty())
      ctx.mismatch("endpoint checks present without endpoint data");
    return ctx.result;
  }
  const Json& ep = report.at("endpoints");
  const CMat g0 = input.g.dc_gain(tol);
  const CMat gbar0 = input.gbar.dc_gain(tol);
  const CMat ginf = input.g.inf_gain();
  const CMat gbarinf = input.gbar.inf_gain();
  for (const auto& [key, m] : {std::pair<const char*, const CMat*>{"g0", &g0},
                               {"gbar0", &gbar0},
                               {"ginf", &ginf},
                               {"gbarinf", &gbarinf}}) {
    const CMat stored =
        matrix_from_json(ep.at(key), where + ".endpoints." + key);
    if (stored.rows() != m->rows() || stored.cols() != m->cols()) {
      ctx.mismatch(std::string(key) + ": endpoint matrix shape differs");
      continue;
    }
    const double dev = (stored - *m).cwiseAbs().maxCoeff();
    if (dev > 1e-12 * (1.0 + stored.cwiseAbs().maxCoeff()))
      ctx.mismatch(std::string(key) + ": endpoint matrix deviates by " +
                   std::to_string(dev));
  }

  const Json& mult = report.at("multipliers");
  std::optional<HermitianMultiplier> pi0, pi_inf;
  if (!mult.at("pi0").is_null())
    pi0 = multiplier_from_json(mult.at("pi0"), where + ".multipliers.pi0");
  if (!mult.at("pi_inf").is_null())
    pi_inf =
        multiplier_from_json(mult.at("pi_inf"), where + ".multipliers.pi_inf");

  const std::vector<double> tau_grid =
      get_double_array(report.at("tau_grid"), where + ".tau_grid");

  std::optional<PairMode> mode;
  const Json& checks = report.at("endpoint_checks");
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const std::string cw = where + ".endpoint_checks[" + std::to_string(i) +
                           "]";
    const Json& c = expect_object(checks[i], cw);
    const FreqPoint f = freq_from_json(c.at("frequency"), cw + ".frequency");
    const PairMode m =
        mode_from_string(c.at("mode").get<std::string>(), cw + ".mode");
    mode = m;
    const bool at_zero = f.kind == FreqPoint::Kind::Zero;
    if (!at_zero && f.kind != FreqPoint::Kind::Infinity) {
      ctx.mismatch(cw + ": endpoint check at an interior frequency");
      continue;
    }
    const auto& pi = at_zero ? pi0 : pi_inf;
    if (!pi) {
      ctx.mismatch(cw + ": no stored multiplier for this endpoint");
      continue;
    }
    const IqcCheckReport redo =
        check_pair(*pi, at_zero ? gbar0 : gbarinf, at_zero ? g0 : ginf,
                   tau_grid, m, f, tol);
    ctx.compare(cw + ".upper_margin", get_double(c.at("upper_margin"), cw),
                redo.upper_margin);
    ctx.compare(cw + ".lower_min", get_double(c.at("lower_min"), cw),
                redo.lower_min);
    if (c.at("pass").get<bool>() != redo.pass)
      ctx.mismatch(cw + ".pass: stored verdict differs on replay");
  }

  const Json& band = report.at("band");
  if (!band.is_null()) {
    if (!pi0 || !pi_inf || !mode) {
      ctx.mismatch("band data present without multipliers or mode");
      return ctx.result;
    }
    FrequencyGrid grid;
    grid.points =
        get_double_array(report.at("grid").at("points"), where + ".grid");
    for (const auto& z : report.at("grid").at("punctured"))
      grid.punctured.emplace_back(get_double(z[0], where + ".grid.punctured"),
                                  get_double(z[1], where + ".grid.punctured"));
    const BandStructureResult redo = verify_band_structure(
        input.g, input.gbar, *pi0, *pi_inf, *mode, grid, tau_grid, tol);
    const bool stored_ok = report.at("band_gap").is_null();
    if (stored_ok != redo.ok)
      ctx.mismatch("band: cover outcome differs on replay");
    ctx.compare("band.omega_lo", get_double(band.at("omega_lo"), where),
                redo.edges.omega_lo);
    ctx.compare("band.omega_hi",
                finite_from(band.at("omega_hi"), where + ".band.omega_hi"),
                redo.edges.omega_hi);
    ctx.compare("band.mid_min_margin",
                finite_from(band.at("mid_min_margin"),
                            where + ".band.mid_min_margin"),
                redo.edges.mid_min_margin);
  }
  return ctx.result;
}

}
