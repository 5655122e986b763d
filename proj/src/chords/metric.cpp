#include <algorithm>
#include <cmath>

#include "workbench/chords.hpp"
#include "workbench/error.hpp"

namespace wb::chords {

namespace {

void require_window(const CylindricalMetricModel& m) {
  const bool finite = std::isfinite(m.window_start) && std::isfinite(m.window_end) && std::isfinite(m.tube_scale) &&
                      std::isfinite(m.fiber_scale);
  if (!finite || !(m.window_end > m.window_start)) throw Error(Errc::degenerate_window, "interpolation window is empty");
  if (!(m.tube_scale > 0.0) || !(m.fiber_scale > 0.0)) throw Error(Errc::degenerate_window, "metric scales must be positive");
}

double epsilon1(const CylindricalMetricModel& m) { return std::exp(-m.window_end); }

double window_fraction(const CylindricalMetricModel& m, double a) {
  return std::clamp((a - m.window_start) / (m.window_end - m.window_start), 0.0, 1.0);
}

double max_rel(const MetricCoefficients& x, const MetricCoefficients& y) {
  return std::max({std::abs(x.aa - y.aa) / std::abs(y.aa), std::abs(x.thth - y.thth) / std::abs(y.thth),
                   std::abs(x.phph - y.phph) / std::abs(y.phph)});
}

}  // namespace

CylindricalMetricModel model_for_depth(double i, double tube_scale, double fiber_scale) {
  CylindricalMetricModel m{i - 0.5, i, tube_scale, fiber_scale};
  require_window(m);
  return m;
}

double quintic_bump(double s) {
  s = std::clamp(s, 0.0, 1.0);
  return s * s * s * (s * (6.0 * s - 15.0) + 10.0);
}

MetricCoefficients original_metric(const CylindricalMetricModel& m, double a) {
  require_window(m);
  const double c = m.tube_scale * std::exp(-2.0 * a);
  return {c, c, m.fiber_scale};
}

MetricCoefficients adjusted_metric(const CylindricalMetricModel& m, double a) {
  require_window(m);
  const double b = quintic_bump(window_fraction(m, a));
  const double e1 = epsilon1(m);
  const double far = m.tube_scale * e1 * e1;
  const double c = a >= m.window_end ? far : (1.0 - b) * m.tube_scale * std::exp(-2.0 * a) + b * far;
  return {c, c, m.fiber_scale};
}

MetricCoefficients adjusted_metric_r(const CylindricalMetricModel& m, double r) {
  if (!(r > 0.0) || !std::isfinite(r)) throw Error(Errc::outside_chart, "r must be positive");
  MetricCoefficients g = adjusted_metric(m, -std::log(r));
  g.aa /= r * r;
  return g;
}

AdjustmentReport cylindrical_adjust(const CylindricalMetricModel& m, int samples) {
  require_window(m);
  if (samples < 2) throw Error(Errc::invalid_input, "need at least two samples");
  AdjustmentReport rep;
  rep.epsilon1 = epsilon1(m);
  const double far = m.tube_scale * rep.epsilon1 * rep.epsilon1;
  rep.far = {far, far, m.fiber_scale};
  rep.monotone = true;
  rep.positive = true;
  const double width = m.window_end - m.window_start;
  const double lo = m.window_start - width;
  const double hi = m.window_end + width;
  double prev = INFINITY;
  for (int i = 0; i < samples; ++i) {
    const double a = lo + (hi - lo) * i / (samples - 1);
    const MetricCoefficients g = adjusted_metric(m, a);
    rep.samples.emplace_back(a, g);
    rep.positive = rep.positive && g.aa > 0 && g.thth > 0 && g.phph > 0;
    if (g.aa > prev) rep.monotone = false;
    prev = g.aa;
    if (a <= m.window_start) rep.max_inside_deviation = std::max(rep.max_inside_deviation, max_rel(g, original_metric(m, a)));
    if (a >= m.window_end) rep.max_far_deviation = std::max(rep.max_far_deviation, max_rel(g, rep.far));
  }
  return rep;
}

double adjusted_lipschitz(const CylindricalMetricModel& m1, const CylindricalMetricModel& m2, double a_lo, double a_hi,
                          int samples) {
  if (!(a_hi >= a_lo) || samples < 2) throw Error(Errc::invalid_input, "bad sampling range");
  double c = 1.0;
  for (int i = 0; i < samples; ++i) {
    const double a = a_lo + (a_hi - a_lo) * i / (samples - 1);
    const MetricCoefficients g1 = adjusted_metric(m1, a);
    const MetricCoefficients g2 = adjusted_metric(m2, a);
    for (auto [x, y] : {std::pair{g1.aa, g2.aa}, std::pair{g1.thth, g2.thth}, std::pair{g1.phph, g2.phph}}) {
      c = std::max({c, x / y, y / x});
    }
  }
  return c;
}

}  // namespace wb::chords
