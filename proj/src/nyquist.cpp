#include "nistab/nyquist.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>

#include "nistab/errors.hpp"
#include "nistab/parallel.hpp"
#include "nistab/rational.hpp"

namespace nistab {

namespace {

constexpr double kPi = std::numbers::pi;
// Scale of the sinh-spaced axis parameterization: near-linear below this
// frequency, logarithmic above, so samples concentrate where the response
// still varies.
constexpr double kAxisScale = 1e-4;

struct Segment {
  enum class Kind { Axis, Indent, Arc } kind;
  // Axis: from w_a down/up to w_b (signed frequencies). Indent: center
  // j*center, radius eps, theta pi/2 -> -pi/2. Arc: radius r,
  // theta -pi/2 -> pi/2.
  double w_a = 0, w_b = 0;
  double center = 0, eps = 0;
  double r = 0;
  int samples = 0;

  Complex map(double t) const {
    switch (kind) {
      case Kind::Axis: {
        const double u0 = std::asinh(w_a / kAxisScale);
        const double u1 = std::asinh(w_b / kAxisScale);
        return Complex(0.0, kAxisScale * std::sinh(u0 + (u1 - u0) * t));
      }
      case Kind::Indent: {
        const double theta = kPi / 2 - kPi * t;
        return Complex(0.0, center) + eps * std::polar(1.0, theta);
      }
      case Kind::Arc: {
        const double theta = -kPi / 2 + kPi * t;
        return r * std::polar(1.0, theta);
      }
    }
    return {};
  }
};

std::vector<Segment> make_segments(const ContourSpec& c) {
  std::vector<Segment> segs;
  // Signed indent centers in traversal order (descending).
  std::vector<double> centers;
  for (auto it = c.indent_points.rbegin(); it != c.indent_points.rend(); ++it)
    centers.push_back(*it);
  for (double w0 : c.indent_points) centers.push_back(-w0);

  double cursor = c.arc_radius;
  for (double w0 : centers) {
    segs.push_back({Segment::Kind::Axis, cursor, w0 + c.epsilon, 0, 0, 0,
                    c.samples_axis});
    segs.push_back(
        {Segment::Kind::Indent, 0, 0, w0, c.epsilon, 0, c.samples_indent});
    cursor = w0 - c.epsilon;
  }
  segs.push_back({Segment::Kind::Axis, cursor, -c.arc_radius, 0, 0, 0,
                  c.samples_axis});
  segs.push_back({Segment::Kind::Arc, 0, 0, 0, 0, c.arc_radius, c.samples_arc});
  return segs;
}

}

ContourSpec build_contour(const TransferMatrix& g, const TransferMatrix& gbar,
                          const ContourOverrides& overrides,
                          const Tolerances& tol) {
  ContourSpec spec;

  auto collect = [&](const TransferMatrix& m) {
    const PoleReport report = m.find_poles(tol);
    if (report.origin_pole)
      throw PoleAtOriginError("contour cannot indent a pole at the origin");
    for (const auto& pole : report.axis) {
      bool merged = false;
      for (double& w : spec.indent_points)
        if (std::abs(w - pole.omega0) <= 1e-6 * (1.0 + pole.omega0)) {
          merged = true;
          break;
        }
      if (!merged) spec.indent_points.push_back(pole.omega0);
    }
  };
  collect(g);
  collect(gbar);
  std::sort(spec.indent_points.begin(), spec.indent_points.end());

  if (overrides.arc_radius) spec.arc_radius = *overrides.arc_radius;
  if (overrides.samples_axis) spec.samples_axis = *overrides.samples_axis;
  if (overrides.samples_indent) spec.samples_indent = *overrides.samples_indent;
  if (overrides.samples_arc) spec.samples_arc = *overrides.samples_arc;

  double max_indent = 1.0;
  for (double w : spec.indent_points) max_indent = std::max(max_indent, w);
  if (spec.arc_radius <= 10.0 * max_indent)
    spec.arc_radius = 100.0 * max_indent;

  if (!spec.indent_points.empty()) {
    double min_gap = spec.indent_points.front();  // gap to the origin
    for (std::size_t i = 1; i < spec.indent_points.size(); ++i)
      min_gap = std::min(min_gap,
                         spec.indent_points[i] - spec.indent_points[i - 1]);
    spec.epsilon = 1e-3 * min_gap;
  }
  if (overrides.epsilon) spec.epsilon = *overrides.epsilon;
  return spec;
}

namespace {

struct DetEvaluator {
  const TransferMatrix& g;
  const TransferMatrix& gbar;
  double tau;
  const Tolerances& tol;

  Complex operator()(Complex s) const {
    const CMat vg = g.evaluate(s, tol);
    const CMat vb = gbar.evaluate(s, tol);
    const CMat m =
        CMat::Identity(vg.rows(), vg.cols()) - tau * (vg * vb);
    return m.determinant();
  }
};

double principal_delta(Complex from, Complex to) {
  return std::arg(to * std::conj(from));
}

// Bisection until the phase step is below pi/2; evaluation points stay on
// the contour so the pole guard cannot trip.
double refine_delta(const DetEvaluator& det, const Segment& seg, double t0,
                    double t1, Complex d0, Complex d1, double& min_abs,
                    const Tolerances& tol, int depth) {
  const double delta = principal_delta(d0, d1);
  if (std::abs(delta) <= kPi / 2) return delta;
  if (depth > 48)
    throw PhaseJumpError("phase step stayed above pi/2 after bisection cap");
  const double tm = 0.5 * (t0 + t1);
  const Complex dm = det(seg.map(tm));
  const double am = std::abs(dm);
  if (am < tol.det_floor)
    throw ContourZeroError("determinant vanishes on the contour");
  min_abs = std::min(min_abs, am);
  return refine_delta(det, seg, t0, tm, d0, dm, min_abs, tol, depth + 1) +
         refine_delta(det, seg, tm, t1, dm, d1, min_abs, tol, depth + 1);
}

}

WindingResult winding_number(const TransferMatrix& g,
                             const TransferMatrix& gbar, double tau,
                             const ContourSpec& contour,
                             const Tolerances& tol) {
  if (g.cols() != gbar.rows() || g.rows() != gbar.cols())
    throw DimensionError("loop product G*Gbar is not square");

  const DetEvaluator det{g, gbar, tau, tol};
  const std::vector<Segment> segments = make_segments(contour);

  WindingResult result;
  // Base samples: each segment sampled half-open on [0, 1); the next
  // segment's first point closes the piece, and the first sample overall
  // closes the arc.
  std::vector<std::pair<int, double>> params;
  for (std::size_t k = 0; k < segments.size(); ++k)
    for (int i = 0; i < segments[k].samples; ++i)
      params.emplace_back(static_cast<int>(k),
                          static_cast<double>(i) / segments[k].samples);

  const std::size_t n = params.size();
  std::vector<Complex> dets(n);
  parallel_for(n, [&](std::size_t i) {
    dets[i] = det(segments[params[i].first].map(params[i].second));
  });

  double min_abs = std::numeric_limits<double>::infinity();
  for (const Complex& d : dets) min_abs = std::min(min_abs, std::abs(d));
  if (min_abs < tol.det_floor)
    throw ContourZeroError(
        "determinant vanishes on the contour (stability boundary)");

  // Arc deviation from the instantaneous-gain limit.
  const CMat limit_m =
      CMat::Identity(g.rows(), g.rows()) - tau * (g.inf_gain() * gbar.inf_gain());
  const Complex det_limit = limit_m.determinant();
  for (std::size_t i = 0; i < n; ++i) {
    if (segments[params[i].first].kind != Segment::Kind::Arc) continue;
    const double dev =
        std::abs(dets[i] - det_limit) / (1.0 + std::abs(det_limit));
    result.arc_deviation = std::max(result.arc_deviation, dev);
  }
  if (result.arc_deviation > 1e-6)
    result.diagnostics.push_back(
        "arc determinant deviates from its limit by " +
        std::to_string(result.arc_deviation) +
        " relative; winding still certified by phase continuity");

  double total = 0;
  result.phase_path.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    result.phase_path.push_back(
        {params[i].first, segments[params[i].first].map(params[i].second),
         dets[i], total});
    const std::size_t j = (i + 1) % n;
    const int seg_idx = params[i].first;
    const double t1 =
        (j != 0 && params[j].first == seg_idx) ? params[j].second : 1.0;
    total += refine_delta(det, segments[seg_idx], params[i].second, t1,
                          dets[i], dets[j], min_abs, tol, 0);
  }

  result.min_abs_det = min_abs;
  const double cycles = total / (2 * kPi);
  result.winding = static_cast<int>(std::lround(cycles));
  result.residual_cycles = std::abs(cycles - result.winding);
  if (result.residual_cycles > 0.1)
    throw Error("winding rounding residual exceeds 0.1 cycles");
  return result;
}

namespace {

RationalMatrix to_rational(const TransferMatrix& m) {
  RationalMatrix out = RationalMatrix::zero(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      RationalFunction acc = RationalFunction::zero();
      for (const auto& t : m.entry(i, j).terms) {
        if (t.num().is_zero()) continue;
        if (t.delay() > 0.0)
          throw NotRationalError(
              "closed-loop polynomial analysis requires a delay-free system");
        acc = acc + RationalFunction{t.num(), t.den()};
      }
      out.at(i, j) = acc;
    }
  return out;
}

}

std::vector<Complex> closed_loop_poles_rational(const TransferMatrix& g,
                                                const TransferMatrix& gbar,
                                                double tau) {
  const RationalMatrix loop = to_rational(g) * to_rational(gbar);
  const RationalMatrix m =
      RationalMatrix::identity(loop.rows) - loop.scaled(tau);
  const RationalFunction d = determinant(m);
  if (d.num.is_zero())
    throw Error("closed-loop determinant is identically zero");
  return roots(d.num);
}

void write_contour_csv(std::ostream& os, const WindingResult& result) {
  os << "segment,s_re,s_im,det_re,det_im,unwrapped_phase\n";
  for (const auto& sample : result.phase_path)
    os << sample.segment << ',' << sample.s.real() << ',' << sample.s.imag()
       << ',' << sample.det.real() << ',' << sample.det.imag() << ','
       << sample.phase << '\n';
}

}
