#include "workbench/slit_domain.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "workbench/error.hpp"

namespace wb::slit {

namespace {

constexpr double pi = std::numbers::pi;

// F' restricted to the real axis inside a gap; strictly decreasing there.
double real_derivative(std::span<const double> w, std::span<const double> a, double x) {
  double s = 0.0;
  for (std::size_t j = 0; j < w.size(); ++j) s += w[j] / (x - a[j]);
  return s;
}

double gap_root(std::span<const double> w, std::span<const double> a, std::size_t gap) {
  double lo = a[gap];
  double hi = a[gap + 1];
  for (int it = 0; it < 400; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) return mid;
    const double f = real_derivative(w, a, mid);
    if (f == 0.0) return mid;
    if (!std::isfinite(f)) {
      throw Error(Errc::numeric_failure, "critical point search hit a non-finite value");
    }
    (f > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

cplx upper(cplx z) {
  if (z.imag() < 0.0) throw Error(Errc::invalid_domain, "point below the real axis");
  return {z.real(), z.imag() == 0.0 ? 0.0 : z.imag()};
}

}  // namespace

Weights::Weights(std::vector<double> inputs) : inputs_(std::move(inputs)) {
  w0_ = std::accumulate(inputs_.begin(), inputs_.end(), 0.0);
}

Weights Weights::from_inputs(std::vector<double> inputs) {
  if (inputs.empty()) throw Error(Errc::invalid_input, "weights need at least one input");
  for (double w : inputs) {
    if (!(w > 0.0) || !std::isfinite(w)) {
      throw Error(Errc::invalid_input, "weights must be finite and strictly positive");
    }
  }
  return Weights(std::move(inputs));
}

Weights concatenate(const Weights& u, const Weights& v, int i) {
  if (i < 1 || i > v.k()) throw Error(Errc::index_range, "gluing index out of range");
  const double tol = 1e-12 * std::max(1.0, u.w0());
  if (std::abs(u.w0() - v.input(i)) > tol) {
    std::ostringstream os;
    os << "output weight " << u.w0() << " does not match input weight " << v.input(i);
    throw Error(Errc::incompatible_weights, os.str());
  }
  std::vector<double> w(v.inputs().begin(), v.inputs().begin() + (i - 1));
  w.insert(w.end(), u.inputs().begin(), u.inputs().end());
  w.insert(w.end(), v.inputs().begin() + i, v.inputs().end());
  return Weights::from_inputs(std::move(w));
}

cplx map_value(const SlitDomain& domain, cplx z) {
  z = upper(z);
  cplx f = 0.0;
  const auto w = domain.weights.inputs();
  for (std::size_t j = 0; j < w.size(); ++j) {
    const cplx d = z - domain.punctures[j];
    if (d == cplx{}) throw Error(Errc::singular_point, "map evaluated at a puncture");
    f += (w[j] / pi) * std::log(cplx{d.real(), d.imag() == 0.0 ? 0.0 : d.imag()});
  }
  return f;
}

cplx map_derivative(const SlitDomain& domain, cplx z) {
  z = upper(z);
  cplx f = 0.0;
  const auto w = domain.weights.inputs();
  for (std::size_t j = 0; j < w.size(); ++j) {
    const cplx d = z - domain.punctures[j];
    if (d == cplx{}) throw Error(Errc::singular_point, "map evaluated at a puncture");
    f += (w[j] / pi) / d;
  }
  return f;
}

std::vector<double> normalize_punctures(std::span<const double> a) {
  std::vector<double> out(a.begin(), a.end());
  if (out.empty()) return out;
  const double shift = out.front();
  const double scale = out.size() >= 2 ? out[1] - out[0] : 1.0;
  for (double& x : out) x = (x - shift) / scale;
  return out;
}

SlitDomain build_slit_map(const Weights& weights, std::span<const double> punctures) {
  const int k = weights.k();
  if (static_cast<int>(punctures.size()) != k) {
    throw Error(Errc::invalid_domain, "one puncture per input weight is required");
  }
  for (int j = 0; j < k; ++j) {
    if (!std::isfinite(punctures[j])) throw Error(Errc::invalid_domain, "non-finite puncture");
    if (j > 0 && !(punctures[j] > punctures[j - 1])) {
      throw Error(Errc::invalid_domain, "punctures must be strictly increasing");
    }
  }
  SlitDomain domain{weights, {punctures.begin(), punctures.end()}, {}, {}, {}};
  const auto w = weights.inputs();
  double remaining = weights.w0();
  for (int l = 0; l + 1 < k; ++l) {
    const double c = gap_root(w, domain.punctures, static_cast<std::size_t>(l));
    if (!(c > domain.punctures[l] && c < domain.punctures[l + 1])) {
      throw Error(Errc::numeric_failure, "failed to bracket a critical point");
    }
    double s = 0.0;
    for (int j = 0; j < k; ++j) s += (w[j] / pi) * std::log(std::abs(c - domain.punctures[j]));
    if (!std::isfinite(s)) throw Error(Errc::numeric_failure, "non-finite slit parameter");
    remaining -= w[l];
    domain.critical_points.push_back(c);
    domain.slit_params.push_back(s);
    domain.levels.push_back(remaining);
  }
  return domain;
}

namespace {

// Shape with a1 = 0, a2 = 1 and log-gaps u for the remaining gaps.
std::vector<double> shape_punctures(int k, const Eigen::VectorXd& u) {
  std::vector<double> a(k, 0.0);
  if (k >= 2) a[1] = 1.0;
  for (int j = 2; j < k; ++j) a[j] = a[j - 1] + std::exp(u[j - 2]);
  return a;
}

Eigen::VectorXd shape_residual(const Weights& w, const Eigen::VectorXd& u, std::span<const double> target) {
  const auto domain = build_slit_map(w, shape_punctures(w.k(), u));
  Eigen::VectorXd r(u.size());
  for (int l = 0; l < u.size(); ++l) {
    r[l] = (domain.slit_params[l + 1] - domain.slit_params[0]) - (target[l + 1] - target[0]);
  }
  return r;
}

bool bisect_1d(const Weights& w, std::span<const double> target, Eigen::VectorXd& u, double tol) {
  auto f = [&](double x) {
    Eigen::VectorXd v(1);
    v[0] = x;
    return shape_residual(w, v, target)[0];
  };
  double lo = -30.0;
  double flo = f(lo);
  for (double hi = -29.0; hi <= 30.0; hi += 1.0) {
    const double fhi = f(hi);
    if (flo == 0.0) {
      u[0] = lo;
      return true;
    }
    if ((flo < 0.0) != (fhi < 0.0)) {
      double a = lo, b = hi, fa = flo;
      for (int it = 0; it < 200 && b - a > 1e-15 * std::max(1.0, std::abs(a)); ++it) {
        const double m = 0.5 * (a + b);
        const double fm = f(m);
        if ((fa < 0.0) == (fm < 0.0)) {
          a = m;
          fa = fm;
        } else {
          b = m;
        }
      }
      u[0] = 0.5 * (a + b);
      return std::abs(f(u[0])) <= tol;
    }
    lo = hi;
    flo = fhi;
  }
  return false;
}

}  // namespace

SlitDomain invert_slit_params(const Weights& weights, std::span<const double> target,
                                  const InvertOptions& options) {
  const int k = weights.k();
  if (k < 2) throw Error(Errc::invalid_arity, "slit inversion needs at least two inputs");
  if (static_cast<int>(target.size()) != k - 1) {
    throw Error(Errc::invalid_input, "expected one target slit per gap");
  }
  for (double s : target) {
    if (!std::isfinite(s)) throw Error(Errc::invalid_input, "non-finite target slit");
  }

  const int dim = k - 2;
  Eigen::VectorXd u = Eigen::VectorXd::Zero(dim);
  double scale = 1.0;
  for (double s : target) scale = std::max(scale, std::abs(s));
  const double tol = options.tol * scale;

  bool converged = dim == 0;
  double norm = 0.0;
  if (!converged) {
    Eigen::VectorXd r = shape_residual(weights, u, target);
    norm = r.norm();
    for (int it = 0; it < options.max_iterations && norm > tol; ++it) {
      Eigen::MatrixXd jac(dim, dim);
      for (int c = 0; c < dim; ++c) {
        const double h = 1e-6;
        Eigen::VectorXd up = u, um = u;
        up[c] += h;
        um[c] -= h;
        jac.col(c) = (shape_residual(weights, up, target) - shape_residual(weights, um, target)) / (2 * h);
      }
      Eigen::VectorXd step = jac.colPivHouseholderQr().solve(-r);
      if (!step.allFinite()) break;
      double t = 1.0;
      bool improved = false;
      for (int ls = 0; ls < 40; ++ls, t *= 0.5) {
        Eigen::VectorXd trial = u + t * step.cwiseMax(-5.0).cwiseMin(5.0);
        Eigen::VectorXd rt;
        try {
          rt = shape_residual(weights, trial, target);
        } catch (const Error&) {
          continue;
        }
        if (rt.norm() < norm) {
          u = trial;
          r = rt;
          norm = rt.norm();
          improved = true;
          break;
        }
      }
      if (!improved) break;
    }
    converged = norm <= tol;
    if (!converged && dim == 1) converged = bisect_1d(weights, target, u, tol);
    if (!converged) {
      norm = shape_residual(weights, u, target).norm();
      std::ostringstream os;
      os << "slit inversion did not converge; residual " << norm;
      throw Error(Errc::numeric_failure, os.str());
    }
  }

  auto a = shape_punctures(k, u);
  const auto shape = build_slit_map(weights, a);
  const double c = std::exp(pi * (target[0] - shape.slit_params[0]) / weights.w0());
  for (double& x : a) x *= c;
  return build_slit_map(weights, a);
}

OneFormValue eval_beta(const SlitDomain& domain, cplx z) {
  const cplx d = map_derivative(domain, z);
  // beta = d Im F, and beta∘j = d Re F under j∂x = ∂y
  return {d.imag(), d.real(), d.real(), -d.imag()};
}

}  // namespace wb::slit
