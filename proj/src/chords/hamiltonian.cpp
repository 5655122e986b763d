#include <algorithm>
#include <cmath>

#include "workbench/chords.hpp"
#include "workbench/error.hpp"

namespace wb::chords {

namespace {

void require_chart(const ProductEnd& end, const PhasePoint& x, Chart chart) {
  for (double v : x) {
    if (!std::isfinite(v)) throw Error(Errc::outside_chart, "phase point is not finite");
  }
  if (!(end.theta_scale > 0.0) || !(end.phi_scale > 0.0)) throw Error(Errc::invalid_input, "product scales must be positive");
  if (chart == Chart::r && !(x[0] > 0.0)) throw Error(Errc::outside_chart, "r must be positive");
}

double energy(const ProductEnd& end, const PhasePoint& x, Chart chart) {
  const double radial = chart == Chart::a ? x[3] : x[0] * x[3];
  return 0.5 * (radial * radial + x[4] * x[4] / end.theta_scale + x[5] * x[5] / end.phi_scale);
}

}  // namespace

double kinetic_hamiltonian(const ProductEnd& end, const PhasePoint& x, Chart chart) {
  require_chart(end, x, chart);
  return energy(end, x, chart);
}

PhasePoint hamiltonian_vector_field(const ProductEnd& end, const PhasePoint& x, Chart chart) {
  require_chart(end, x, chart);
  Eigen::Matrix<double, 6, 1> grad;
  for (int i = 0; i < 6; ++i) {
    const double step = 1e-3 * std::max(1.0, std::abs(x[i]));
    auto at = [&](double k) {
      PhasePoint y = x;
      y[i] += k * step;
      return energy(end, y, chart);
    };
    grad(i) = (at(-2) - 8 * at(-1) + 8 * at(1) - at(2)) / (12 * step);
  }
  Eigen::Matrix<double, 6, 6> omega = Eigen::Matrix<double, 6, 6>::Zero();
  omega.topRightCorner<3, 3>().setIdentity();
  omega.bottomLeftCorner<3, 3>() = -Eigen::Matrix3d::Identity();
  const Eigen::Matrix<double, 6, 1> field = omega.transpose().partialPivLu().solve(grad);
  PhasePoint out;
  for (int i = 0; i < 6; ++i) out[i] = field(i);
  return out;
}

PhasePoint closed_form_field(const ProductEnd& end, const PhasePoint& x, Chart chart) {
  require_chart(end, x, chart);
  const double dtheta = x[4] / end.theta_scale;
  const double dphi = x[5] / end.phi_scale;
  if (chart == Chart::a) return {x[3], dtheta, dphi, 0.0, 0.0, 0.0};
  const double r = x[0];
  const double pr = x[3];
  return {r * r * pr, dtheta, dphi, -r * pr * pr, 0.0, 0.0};
}

PhasePoint to_r_chart(const PhasePoint& x) {
  const double r = std::exp(-x[0]);
  return {r, x[1], x[2], -x[3] / r, x[4], x[5]};
}

Hamiltonian flat_quadratic() {
  return [](const PhasePoint& x) { return 0.5 * (x[3] * x[3] + x[4] * x[4] + x[5] * x[5]); };
}

Hamiltonian flat_norm() {
  return [](const PhasePoint& x) { return std::sqrt(x[3] * x[3] + x[4] * x[4] + x[5] * x[5]); };
}

RescaleReport quadratic_rescale_check(double w, std::span<const PhasePoint> samples, const Hamiltonian& h,
                                      const Spectrum* spectrum) {
  if (!(w > 0.0) || !std::isfinite(w)) throw Error(Errc::invalid_input, "weight must be positive");
  RescaleReport rep;
  rep.weight = w;
  rep.fiber_scale = w;
  for (const PhasePoint& x : samples) {
    PhasePoint y = x;
    for (int i = 3; i < 6; ++i) y[i] *= w;
    rep.max_residual = std::max(rep.max_residual, std::abs(h(y) / (w * w) - h(x)));
  }
  if (spectrum) {
    for (std::size_t i = 0; i < spectrum->classes.size(); ++i) {
      rep.relabeling.push_back(i);
      rep.rescaled_fiber_norms.push_back(spectrum->classes[i].length / w);
    }
  }
  return rep;
}

}  // namespace wb::chords
