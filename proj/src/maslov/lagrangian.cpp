#include <algorithm>
#include <cmath>
#include <unsupported/Eigen/MatrixFunctions>

#include "workbench/error.hpp"
#include "workbench/maslov.hpp"

namespace wb::maslov {

Eigen::MatrixXd standard_j(int n) {
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  j.topRightCorner(n, n).setIdentity();
  j.bottomLeftCorner(n, n) = -Eigen::MatrixXd::Identity(n, n);
  return j;
}

Eigen::MatrixXd orthonormal_rows(const Eigen::MatrixXd& rows) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(rows * rows.transpose());
  return es.operatorInverseSqrt() * rows;
}

LagrangianFrame LagrangianFrame::from_rows(Eigen::MatrixXd rows, double tol) {
  const auto n = rows.rows();
  if (n == 0 || rows.cols() != 2 * n) throw Error(Errc::invalid_input, "Lagrangian frame must be n x 2n");
  if (!rows.allFinite()) throw Error(Errc::invalid_input, "Lagrangian frame is not finite");
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(rows);
  const auto& sv = svd.singularValues();
  if (sv(n - 1) <= tol * sv(0)) throw Error(Errc::invalid_input, "Lagrangian frame is rank deficient");
  const Eigen::MatrixXd q = orthonormal_rows(rows);
  if ((q * standard_j(static_cast<int>(n)) * q.transpose()).cwiseAbs().maxCoeff() > tol) {
    throw Error(Errc::invalid_input, "frame does not span a Lagrangian subspace");
  }
  return LagrangianFrame(std::move(rows));
}

LagrangianFrame real_frame(int n) {
  Eigen::MatrixXd rows = Eigen::MatrixXd::Zero(n, 2 * n);
  rows.leftCols(n).setIdentity();
  return LagrangianFrame::from_rows(std::move(rows));
}

LagrangianFrame unitary_frame(const Eigen::MatrixXcd& u) {
  const auto n = u.rows();
  Eigen::MatrixXd rows(n, 2 * n);
  rows << u.real().transpose(), u.imag().transpose();
  return LagrangianFrame::from_rows(std::move(rows));
}

LagrangianFrame transform(const Eigen::MatrixXd& b, const LagrangianFrame& frame) {
  return LagrangianFrame::from_rows(frame.rows() * b.transpose());
}

LagrangianPath constant_path(const LagrangianFrame& frame) {
  return {0.0, 1.0, frame.dimension(), [rows = frame.rows()](double) { return rows; }};
}

LagrangianPath concatenate(const LagrangianPath& a, const LagrangianPath& b) {
  if (a.dimension != b.dimension) throw Error(Errc::invalid_input, "paths of different dimension");
  const double split = a.t1;
  const double shift = b.t0 - split;
  return {a.t0, split + (b.t1 - b.t0), a.dimension, [a, b, split, shift](double t) {
            return t <= split ? a.frame(t) : b.frame(t + shift);
          }};
}

LagrangianPath reverse(const LagrangianPath& p) {
  return {p.t0, p.t1, p.dimension, [p](double t) { return p.frame(p.t0 + p.t1 - t); }};
}

LagrangianPath transform(const Eigen::MatrixXd& b, const LagrangianPath& p) {
  return {p.t0, p.t1, p.dimension, [p, bt = Eigen::MatrixXd(b.transpose())](double t) { return p.frame(t) * bt; }};
}

LagrangianPath unitary_path(std::vector<Eigen::MatrixXd> coeffs, double t0, double t1) {
  if (coeffs.empty()) throw Error(Errc::invalid_input, "need at least one coefficient");
  const auto n = coeffs.front().rows();
  for (const Eigen::MatrixXd& c : coeffs) {
    if (c.rows() != n || c.cols() != n || (c - c.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
      throw Error(Errc::invalid_input, "coefficients must be symmetric and of equal size");
    }
  }
  return {t0, t1, static_cast<int>(n), [coeffs = std::move(coeffs), n](double t) {
            Eigen::MatrixXd s = Eigen::MatrixXd::Zero(n, n);
            double power = 1.0;
            for (const Eigen::MatrixXd& c : coeffs) {
              s += power * c;
              power *= t;
            }
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(s);
            const Eigen::MatrixXd& v = es.eigenvectors();
            const Eigen::ArrayXd angles = es.eigenvalues().array();
            const Eigen::MatrixXd re = v * angles.cos().matrix().asDiagonal() * v.transpose();
            const Eigen::MatrixXd im = v * angles.sin().matrix().asDiagonal() * v.transpose();
            Eigen::MatrixXd rows(n, 2 * n);
            rows << re.transpose(), im.transpose();
            return rows;
          }};
}

SymplecticPath SymplecticPath::from_samples(std::vector<double> times, std::vector<Eigen::MatrixXd> matrices,
                                            double tol) {
  if (times.size() < 2 || times.size() != matrices.size()) {
    throw Error(Errc::invalid_input, "need at least two times and one matrix per time");
  }
  if (!std::is_sorted(times.begin(), times.end()) ||
      std::adjacent_find(times.begin(), times.end()) != times.end()) {
    throw Error(Errc::invalid_input, "times must be strictly increasing");
  }
  const auto dim = matrices.front().rows();
  if (dim == 0 || dim % 2 != 0) throw Error(Errc::invalid_input, "symplectic matrices must be 2n x 2n");
  const Eigen::MatrixXd j = standard_j(static_cast<int>(dim / 2));
  SymplecticPath p;
  for (std::size_t i = 0; i < matrices.size(); ++i) {
    const Eigen::MatrixXd& b = matrices[i];
    if (b.rows() != dim || b.cols() != dim) throw Error(Errc::invalid_input, "matrix size mismatch");
    const double defect = (b.transpose() * j * b - j).cwiseAbs().maxCoeff();
    if (!(defect <= tol)) {
      throw Error(Errc::invalid_input, "sample " + std::to_string(i) + " is not symplectic");
    }
  }
  for (std::size_t i = 0; i + 1 < matrices.size(); ++i) {
    const Eigen::MatrixXd step = matrices[i].inverse() * matrices[i + 1];
    const Eigen::MatrixXd log = step.log();
    if (!log.allFinite()) throw Error(Errc::numeric_failure, "matrix logarithm failed on segment " + std::to_string(i));
    p.logs_.push_back(log);
  }
  p.times_ = std::move(times);
  p.mats_ = std::move(matrices);
  return p;
}

Eigen::MatrixXd SymplecticPath::at(double t) const {
  t = std::clamp(t, times_.front(), times_.back());
  auto it = std::upper_bound(times_.begin(), times_.end(), t);
  std::size_t seg = std::min<std::size_t>(std::max<std::ptrdiff_t>(it - times_.begin(), 1) - 1, logs_.size() - 1);
  const double s = (t - times_[seg]) / (times_[seg + 1] - times_[seg]);
  const Eigen::MatrixXd scaled = s * logs_[seg];
  return mats_[seg] * scaled.exp();
}

LagrangianPath SymplecticPath::acting_on(const LagrangianFrame& frame) const {
  if (2 * frame.dimension() != mats_.front().rows()) throw Error(Errc::invalid_input, "frame dimension mismatch");
  return {times_.front(), times_.back(), frame.dimension(),
          [self = *this, rows = frame.rows()](double t) { return Eigen::MatrixXd(rows * self.at(t).transpose()); }};
}

}  // namespace wb::maslov
