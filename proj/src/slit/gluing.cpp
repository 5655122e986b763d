#include <cmath>
#include <numbers>
#include <numeric>

#include "workbench/error.hpp"
#include "workbench/slit_domain.hpp"

namespace wb::slit {

namespace {

constexpr double pi = std::numbers::pi;

void check_gluing(const SlitDomain& u, const SlitDomain& v, int i, double length) {
  if (!(length > 0.0) || !std::isfinite(length)) {
    throw Error(Errc::invalid_input, "gluing length must be positive");
  }
  (void)concatenate(u.weights, v.weights, i);
}

// Scale of the inserted cluster so that its slits sit at s_u - length.
double cluster_scale(const SlitDomain& u, const SlitDomain& v, int i, double length) {
  double offset = 0.0;
  const auto vw = v.weights.inputs();
  for (int q = 0; q < v.weights.k(); ++q) {
    if (q == i - 1) continue;
    offset += (vw[q] / pi) * std::log(std::abs(v.punctures[i - 1] - v.punctures[q]));
  }
  return std::exp(-pi * (length + offset) / u.weights.w0());
}

}  // namespace

std::vector<double> glued_limit_slits(const SlitDomain& u, const SlitDomain& v, int i,
                                      double length) {
  check_gluing(u, v, i, length);
  std::vector<double> s(v.slit_params.begin(), v.slit_params.begin() + (i - 1));
  for (double x : u.slit_params) s.push_back(x - length);
  s.insert(s.end(), v.slit_params.begin() + (i - 1), v.slit_params.end());
  return s;
}

SlitDomain glue_slit_domains(const SlitDomain& u, const SlitDomain& v, int i,
                                 double length) {
  check_gluing(u, v, i, length);
  const Weights w = concatenate(u.weights, v.weights, i);
  const double lambda = cluster_scale(u, v, i, length);
  const double centre = std::accumulate(u.punctures.begin(), u.punctures.end(), 0.0) / u.punctures.size();
  const double anchor = v.punctures[i - 1];

  std::vector<double> a(v.punctures.begin(), v.punctures.begin() + (i - 1));
  for (double b : u.punctures) a.push_back(anchor + lambda * (b - centre));
  a.insert(a.end(), v.punctures.begin() + i, v.punctures.end());

  const double lo = i > 1 ? v.punctures[i - 2] : -INFINITY;
  const double hi = i < v.weights.k() ? v.punctures[i] : INFINITY;
  const double first = a[i - 1];
  const double last = a[i - 1 + u.weights.k() - 1];
  if (!(first > lo) || !(last < hi) || (u.weights.k() > 1 && !(last > first))) {
    throw Error(Errc::invalid_domain, "gluing length too short: inserted cluster overlaps neighbouring punctures");
  }
  return build_slit_map(w, a);
}

}  // namespace wb::slit
