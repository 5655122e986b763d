#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "workbench/chords.hpp"

namespace wb::maslov {

// [[0, I], [-I, 0]]; omega(u, v) = u^T J v.
Eigen::MatrixXd standard_j(int n);

// Rows span a Lagrangian subspace of R^{2n}.
class LagrangianFrame {
 public:
  static LagrangianFrame from_rows(Eigen::MatrixXd rows, double tol = 1e-9);
  const Eigen::MatrixXd& rows() const { return rows_; }
  int dimension() const { return static_cast<int>(rows_.rows()); }

 private:
  explicit LagrangianFrame(Eigen::MatrixXd rows) : rows_(std::move(rows)) {}
  Eigen::MatrixXd rows_;
};

// Polar orthonormalization (X X^T)^{-1/2} X, smooth in X.
Eigen::MatrixXd orthonormal_rows(const Eigen::MatrixXd& rows);

LagrangianFrame real_frame(int n);
// U R^n for unitary U: rows [Re U^T | Im U^T].
LagrangianFrame unitary_frame(const Eigen::MatrixXcd& u);
// Image of the frame's span under a linear map of R^{2n}.
LagrangianFrame transform(const Eigen::MatrixXd& b, const LagrangianFrame& frame);

struct LagrangianPath {
  double t0 = 0.0;
  double t1 = 1.0;
  int dimension = 1;
  std::function<Eigen::MatrixXd(double)> frame;
};

LagrangianPath constant_path(const LagrangianFrame& frame);
// Traverses a then b; b is shifted to start where a ends.
LagrangianPath concatenate(const LagrangianPath& a, const LagrangianPath& b);
LagrangianPath reverse(const LagrangianPath& p);
LagrangianPath transform(const Eigen::MatrixXd& b, const LagrangianPath& p);

// exp(i S(t)) R^n with S(t) = sum_k t^k coeffs[k]; coefficients must be symmetric.
LagrangianPath unitary_path(std::vector<Eigen::MatrixXd> coeffs, double t0 = 0.0, double t1 = 1.0);

// Piecewise exp-log interpolation between symplectic samples.
class SymplecticPath {
 public:
  static SymplecticPath from_samples(std::vector<double> times, std::vector<Eigen::MatrixXd> matrices,
                                     double tol = 1e-9);
  Eigen::MatrixXd at(double t) const;
  const std::vector<double>& times() const { return times_; }
  const std::vector<Eigen::MatrixXd>& matrices() const { return mats_; }
  LagrangianPath acting_on(const LagrangianFrame& frame) const;

 private:
  std::vector<double> times_;
  std::vector<Eigen::MatrixXd> mats_;
  std::vector<Eigen::MatrixXd> logs_;
};

struct Crossing {
  double t = 0.0;
  int kernel_dim = 0;
  int twice_contribution = 0;
  bool endpoint = false;
};

struct IndexResult {
  int twice = 0;
  std::vector<Crossing> crossings;
  bool perturbed = false;
  double value() const { return twice / 2.0; }
};

struct RsOptions {
  int samples = 256;
  double epsilon = 1e-6;
  bool allow_perturbation = true;
};

IndexResult rs_index(const LagrangianPath& path, const LagrangianFrame& reference, const RsOptions& options = {});

// span{(e1,0), (e2,0), (0,e3)}: conormal of T^2 x {0} in T^3.
LagrangianFrame conormal_frame_t3();

struct ChordIndex {
  int twice = 0;
  bool morse_bott = false;
  IndexResult detail;
  double value() const { return twice / 2.0; }
};

// Linearized flow (q, p) -> (q + t G^{-1} p, p) applied to the conormal frame, against itself.
LagrangianPath shear_path(const Eigen::Matrix3d& gram, const LagrangianFrame& frame);
ChordIndex chord_index(const chords::ChordClass& chord, const Eigen::Matrix3d& gram = Eigen::Matrix3d::Identity(),
                       const RsOptions& options = {});

}  // namespace wb::maslov
