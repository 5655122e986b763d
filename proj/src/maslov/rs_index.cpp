#include <algorithm>
#include <cmath>
#include <functional>
#include <unsupported/Eigen/MatrixFunctions>

#include "workbench/error.hpp"
#include "workbench/maslov.hpp"

namespace wb::maslov {

namespace {

constexpr double crossing_tol = 1e-10;
constexpr double kernel_tol = 1e-8;
constexpr double form_tol = 1e-6;
constexpr double refine_floor = 1e-5;

struct Scanner {
  const LagrangianPath& path;
  Eigen::MatrixXd ref_jt;  // J R^T with R orthonormal
  Eigen::MatrixXd j;

  Eigen::MatrixXd frame(double t) const { return orthonormal_rows(path.frame(t)); }
  Eigen::MatrixXd pairing(double t) const { return frame(t) * ref_jt; }
  double det(double t) const { return pairing(t).determinant(); }
  double sigma_min(double t) const {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(pairing(t));
    return svd.singularValues().minCoeff();
  }

  Eigen::MatrixXd velocity(double t) const {
    const double h = 1e-6 * (path.t1 - path.t0);
    if (t - h < path.t0) return (-3 * frame(t) + 4 * frame(t + h) - frame(t + 2 * h)) / (2 * h);
    if (t + h > path.t1) return (3 * frame(t) - 4 * frame(t - h) + frame(t - 2 * h)) / (2 * h);
    return (frame(t + h) - frame(t - h)) / (2 * h);
  }

  struct Form {
    int kernel_dim = 0;
    int signature = 0;
    bool degenerate = false;
  };

  Form crossing_form(double t) const {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(pairing(t), Eigen::ComputeFullU);
    const auto& sv = svd.singularValues();
    std::vector<int> ker;
    for (int i = 0; i < sv.size(); ++i) {
      if (sv(i) < kernel_tol) ker.push_back(i);
    }
    Form f;
    f.kernel_dim = static_cast<int>(ker.size());
    if (ker.empty()) return f;
    Eigen::MatrixXd c(sv.size(), ker.size());
    for (std::size_t i = 0; i < ker.size(); ++i) c.col(i) = svd.matrixU().col(ker[i]);
    const Eigen::MatrixXd x = frame(t);
    const Eigen::MatrixXd g = x * j * velocity(t).transpose();
    const Eigen::MatrixXd q = c.transpose() * (0.5 * (g + g.transpose())) * c;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(q);
    for (int i = 0; i < es.eigenvalues().size(); ++i) {
      const double l = es.eigenvalues()(i);
      if (std::abs(l) < form_tol) f.degenerate = true;
      f.signature += l > 0 ? 1 : -1;
    }
    return f;
  }
};

double bisect_root(const Scanner& s, double lo, double hi, double dlo) {
  for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(hi)); ++it) {
    const double mid = 0.5 * (lo + hi);
    const double dm = s.det(mid);
    if (dm == 0.0) return mid;
    if ((dm > 0) == (dlo > 0)) {
      lo = mid;
      dlo = dm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::pair<double, double> golden_min(const Scanner& s, double lo, double hi) {
  constexpr double g = 0.6180339887498949;
  double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
  double f1 = s.sigma_min(x1), f2 = s.sigma_min(x2);
  for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(hi)); ++it) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - g * (hi - lo);
      f1 = s.sigma_min(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + g * (hi - lo);
      f2 = s.sigma_min(x2);
    }
  }
  return f1 < f2 ? std::pair{x1, f1} : std::pair{x2, f2};
}

struct RawIndex {
  IndexResult result;
  bool degenerate = false;
  double where = 0.0;
};

RawIndex raw_index(const LagrangianPath& path, const Eigen::MatrixXd& reference, int samples) {
  const int n = path.dimension;
  Scanner s{path, standard_j(n) * orthonormal_rows(reference).transpose(), standard_j(n)};
  RawIndex raw;
  const double span = path.t1 - path.t0;
  const double eta = 1e-8 * span;

  std::vector<double> roots;
  std::vector<bool> at_end;
  auto flag_degenerate = [&](double t) {
    if (!raw.degenerate) raw.where = t;
    raw.degenerate = true;
  };

  const bool start_cross = s.sigma_min(path.t0) < crossing_tol;
  const bool end_cross = s.sigma_min(path.t1) < crossing_tol;

  std::vector<double> ts(samples + 1), dets(samples + 1), sig(samples + 1);
  for (int i = 0; i <= samples; ++i) {
    ts[i] = path.t0 + span * i / samples;
    double probe = ts[i];
    if (i == 0 && start_cross) probe += eta;
    if (i == samples && end_cross) probe -= eta;
    dets[i] = s.det(probe);
    sig[i] = s.sigma_min(probe);
  }
  for (int i = 0; i < samples; ++i) {
    if (sig[i] < crossing_tol && sig[i + 1] < crossing_tol) flag_degenerate(ts[i]);
  }
  for (int i = 1; i < samples; ++i) {
    if (sig[i] < crossing_tol) roots.push_back(ts[i]);
  }
  const double min_width = 1e-9 * span;
  std::function<void(double, double, double, double, double, double)> scan = [&](double a, double b, double sa,
                                                                                 double sb, double da, double db) {
    if (sa < crossing_tol || sb < crossing_tol) return;
    const double speed = 2.0 * (s.frame(b) - s.frame(a)).norm() / (b - a) + 1e-12;
    if (sa + sb > speed * (b - a) && (da > 0) == (db > 0)) return;
    if (b - a > min_width && std::max(sa, sb) > refine_floor) {
      constexpr int parts = 4;
      double pa = a, psa = sa, pda = da;
      for (int q = 1; q <= parts; ++q) {
        const double pb = q == parts ? b : a + (b - a) * q / parts;
        const double psb = q == parts ? sb : s.sigma_min(pb);
        const double pdb = q == parts ? db : s.det(pb);
        if (psb < crossing_tol && q < parts) roots.push_back(pb);
        scan(pa, pb, psa, psb, pda, pdb);
        pa = pb;
        psa = psb;
        pda = pdb;
      }
      return;
    }
    if ((da > 0) != (db > 0)) {
      roots.push_back(bisect_root(s, a, b, da));
    } else {
      auto [t, v] = golden_min(s, a, b);
      if (v < crossing_tol) roots.push_back(t);
    }
  };
  for (int i = 0; i < samples; ++i) scan(ts[i], ts[i + 1], sig[i], sig[i + 1], dets[i], dets[i + 1]);
  std::sort(roots.begin(), roots.end());
  std::vector<double> unique;
  for (double r : roots) {
    if (r - path.t0 < eta || path.t1 - r < eta) continue;
    if (unique.empty() || r - unique.back() > 1e-7 * span) unique.push_back(r);
  }

  auto record = [&](double t, bool endpoint) {
    const auto form = s.crossing_form(t);
    if (form.kernel_dim == 0) return;
    if (form.degenerate) flag_degenerate(t);
    const int contribution = endpoint ? form.signature : 2 * form.signature;
    raw.result.crossings.push_back({t, form.kernel_dim, contribution, endpoint});
    raw.result.twice += contribution;
  };
  if (start_cross) record(path.t0, true);
  for (double r : unique) record(r, false);
  if (end_cross) record(path.t1, true);
  return raw;
}

Eigen::MatrixXd rotated(const Eigen::MatrixXd& reference, double eps) {
  const Eigen::MatrixXd generator = eps * standard_j(static_cast<int>(reference.rows()));
  return reference * generator.exp().transpose();
}

}  // namespace

IndexResult rs_index(const LagrangianPath& path, const LagrangianFrame& reference, const RsOptions& options) {
  if (path.dimension != reference.dimension()) throw Error(Errc::invalid_input, "path and reference dimensions differ");
  if (!(path.t1 > path.t0)) throw Error(Errc::invalid_input, "path interval is empty");
  if (options.samples < 2) throw Error(Errc::invalid_input, "need at least two samples");
  RawIndex raw = raw_index(path, reference.rows(), options.samples);
  if (!raw.degenerate) return raw.result;
  if (!options.allow_perturbation) {
    throw Error(Errc::degenerate_crossing, "degenerate crossing at t = " + std::to_string(raw.where));
  }
  auto averaged = [&](double eps) {
    const RawIndex plus = raw_index(path, rotated(reference.rows(), eps), options.samples);
    const RawIndex minus = raw_index(path, rotated(reference.rows(), -eps), options.samples);
    if (plus.degenerate || minus.degenerate || (plus.result.twice + minus.result.twice) % 2 != 0) {
      throw Error(Errc::degenerate_crossing, "degenerate crossing at t = " + std::to_string(raw.where) +
                                                 " persists after perturbation by " + std::to_string(eps));
    }
    IndexResult r;
    r.twice = (plus.result.twice + minus.result.twice) / 2;
    r.perturbed = true;
    r.crossings = plus.result.crossings;
    r.crossings.insert(r.crossings.end(), minus.result.crossings.begin(), minus.result.crossings.end());
    return r;
  };
  IndexResult coarse = averaged(options.epsilon);
  const IndexResult fine = averaged(options.epsilon / 10);
  if (coarse.twice != fine.twice) {
    throw Error(Errc::degenerate_crossing,
                "index near t = " + std::to_string(raw.where) + " is unstable under perturbation");
  }
  return coarse;
}

}  // namespace wb::maslov
