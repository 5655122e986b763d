#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <numbers>

#include "workbench/error.hpp"
#include "workbench/field_kernels.hpp"
#include "workbench/slit_domain.hpp"

namespace wb::slit {

namespace {

constexpr double pi = std::numbers::pi;
constexpr int quad_order = 16;

struct Rule {
  std::vector<double> nodes;    // on [0, 1]
  std::vector<double> weights;  // summing to 1
};

const Rule& gauss_rule() {
  static const Rule rule = [] {
    using G = boost::math::quadrature::gauss<double, quad_order>;
    Rule r;
    const auto& x = G::abscissa();
    const auto& w = G::weights();
    for (std::size_t i = 0; i < x.size(); ++i) {
      r.nodes.push_back(0.5 - 0.5 * x[i]);
      r.weights.push_back(0.5 * w[i]);
      if (x[i] != 0.0) {
        r.nodes.push_back(0.5 + 0.5 * x[i]);
        r.weights.push_back(0.5 * w[i]);
      }
    }
    return r;
  }();
  return rule;
}

struct Field {
  std::vector<double> coeffs;
  std::vector<double> poles;
  const FormTerm* extra = nullptr;

  // Evaluates F' on the batch and returns (beta, beta∘j) dotted with a direction.
  void along(std::span<const double> xs, std::span<const double> ys, bool horizontal,
             std::span<double> beta, std::span<double> beta_j) const {
    std::vector<double> re(xs.size()), im(xs.size());
    kernels::eval_field({xs, ys, coeffs, poles, re, im});
    for (std::size_t i = 0; i < xs.size(); ++i) {
      double bx = im[i], by = re[i];
      if (extra && *extra) {
        const auto e = (*extra)(xs[i], ys[i]);
        bx += e[0];
        by += e[1];
      }
      beta[i] = horizontal ? bx : by;
      beta_j[i] = horizontal ? by : -bx;
    }
  }
};

// Pullback of beta to strip coordinates (tau, t) at a point z with dz/dtau = pi*e.
std::array<double, 2> pullback(const Field& f, cplx g, cplx z, cplx e) {
  std::array<double, 2> out{pi * g.imag(), pi * g.real()};
  if (f.extra && *f.extra) {
    const auto x = (*f.extra)(z.real(), z.imag());
    const cplx dtau = pi * e;
    const cplx dt = cplx{0.0, pi} * e;
    out[0] += x[0] * dtau.real() + x[1] * dtau.imag();
    out[1] += x[0] * dt.real() + x[1] * dt.imag();
  }
  return out;
}

}  // namespace

VerificationReport verify_beta_conditions(const SlitDomain& domain, int grid_density, double tol,
                                          const VerifyOptions& options) {
  if (!(tol > 0.0)) throw Error(Errc::invalid_input, "tolerance must be positive");
  if (grid_density < 1) throw Error(Errc::invalid_input, "grid density must be positive");
  VerificationReport rep;
  rep.grid_density = grid_density;
  rep.tol = tol;

  const auto w = domain.weights.inputs();
  const auto& a = domain.punctures;
  const int k = domain.weights.k();
  Field field;
  for (int j = 0; j < k; ++j) {
    field.coeffs.push_back(w[j] / pi);
    field.poles.push_back(a[j]);
  }
  field.extra = &options.extra_term;

  const int n = grid_density;
  const double margin = std::max(1.0, a.back() - a.front());
  const double x0 = a.front() - margin;
  const double width = a.back() - a.front() + 2 * margin;
  const double h = width / n;
  const double y0 = 2 * h;
  const Rule& rule = gauss_rule();
  const int q = static_cast<int>(rule.nodes.size());

  // Line integrals of beta and beta∘j along every horizontal and vertical grid edge.
  std::vector<double> hb((n + 1) * n), hj((n + 1) * n), vb((n + 1) * n), vj((n + 1) * n);
  std::vector<double> xs(n * q), ys(n * q), b(n * q), bj(n * q);
  for (int row = 0; row <= n; ++row) {
    const double y = y0 + row * h;
    for (int c = 0; c < n; ++c) {
      for (int p = 0; p < q; ++p) {
        xs[c * q + p] = x0 + (c + rule.nodes[p]) * h;
        ys[c * q + p] = y;
      }
    }
    field.along(xs, ys, true, b, bj);
    for (int c = 0; c < n; ++c) {
      double sb = 0.0, sj = 0.0;
      for (int p = 0; p < q; ++p) {
        sb += rule.weights[p] * b[c * q + p];
        sj += rule.weights[p] * bj[c * q + p];
      }
      hb[row * n + c] = sb * h;
      hj[row * n + c] = sj * h;
    }
  }
  for (int col = 0; col <= n; ++col) {
    const double x = x0 + col * h;
    for (int r = 0; r < n; ++r) {
      for (int p = 0; p < q; ++p) {
        xs[r * q + p] = x;
        ys[r * q + p] = y0 + (r + rule.nodes[p]) * h;
      }
    }
    field.along(xs, ys, false, b, bj);
    for (int r = 0; r < n; ++r) {
      double sb = 0.0, sj = 0.0;
      for (int p = 0; p < q; ++p) {
        sb += rule.weights[p] * b[r * q + p];
        sj += rule.weights[p] * bj[r * q + p];
      }
      vb[col * n + r] = sb * h;
      vj[col * n + r] = sj * h;
    }
  }
  const double area = h * h;
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      const double cb = hb[r * n + c] + vb[(c + 1) * n + r] - hb[(r + 1) * n + c] - vb[c * n + r];
      const double cj = hj[r * n + c] + vj[(c + 1) * n + r] - hj[(r + 1) * n + c] - vj[c * n + r];
      rep.max_d_beta = std::max(rep.max_d_beta, std::abs(cb) / area);
      rep.max_d_beta_j = std::max(rep.max_d_beta_j, std::abs(cj) / area);
    }
  }

  // Tangential component along the real axis, skipping the punctures.
  std::vector<double> bx, by;
  for (int c = 0; c <= 4 * n; ++c) {
    const double x = x0 + c * (width / (4 * n));
    if (std::any_of(a.begin(), a.end(), [&](double p) { return std::abs(x - p) < 1e-12; })) continue;
    bx.push_back(x);
    by.push_back(0.0);
  }
  std::vector<double> tb(bx.size()), tj(bx.size());
  field.along(bx, by, true, tb, tj);
  for (double v : tb) rep.max_boundary_tangential = std::max(rep.max_boundary_tangential, std::abs(v));

  // Strip-like ends at coordinate depth end_depth.
  const double depth = options.end_depth;
  rep.end_deviation.assign(k + 1, 0.0);
  for (int s = 0; s < options.end_samples; ++s) {
    const double t = options.end_samples == 1 ? 0.5 : double(s) / (options.end_samples - 1);
    const cplx rot = std::polar(1.0, pi * t);
    {
      const cplx e = std::exp(pi * depth) * rot;
      cplx g = 0.0;
      for (int i = 0; i < k; ++i) g += (w[i] / pi) * (e / (e - a[i]));
      const auto pb = pullback(field, g, e, e);
      rep.end_deviation[0] = std::max({rep.end_deviation[0], std::abs(pb[0]), std::abs(pb[1] - domain.weights.w0())});
    }
    for (int j = 0; j < k; ++j) {
      const cplx e = std::exp(-pi * depth) * rot;
      cplx g = w[j] / pi;
      for (int i = 0; i < k; ++i) {
        if (i != j) g += (w[i] / pi) * (e / ((a[j] - a[i]) + e));
      }
      const auto pb = pullback(field, g, a[j] + e, e);
      rep.end_deviation[j + 1] = std::max({rep.end_deviation[j + 1], std::abs(pb[0]), std::abs(pb[1] - w[j])});
    }
  }
  rep.max_end_deviation = *std::max_element(rep.end_deviation.begin(), rep.end_deviation.end());
  rep.pass = rep.max_d_beta < tol && rep.max_d_beta_j < tol && rep.max_boundary_tangential < tol &&
             rep.max_end_deviation < tol;
  return rep;
}

}  // namespace wb::slit
