#include "workbench/maslov.hpp"

namespace wb::maslov {

LagrangianFrame conormal_frame_t3() {
  Eigen::MatrixXd rows = Eigen::MatrixXd::Zero(3, 6);
  rows(0, 0) = 1;
  rows(1, 1) = 1;
  rows(2, 5) = 1;
  return LagrangianFrame::from_rows(std::move(rows));
}

LagrangianPath shear_path(const Eigen::Matrix3d& gram, const LagrangianFrame& frame) {
  const Eigen::Matrix3d inverse = gram.inverse();
  return {0.0, 1.0, 3, [inverse, rows = frame.rows()](double t) {
            Eigen::MatrixXd b = Eigen::MatrixXd::Identity(6, 6);
            b.topRightCorner(3, 3) = t * inverse;
            return Eigen::MatrixXd(rows * b.transpose());
          }};
}

ChordIndex chord_index(const chords::ChordClass& chord, const Eigen::Matrix3d& gram, const RsOptions& options) {
  if (chord.constant_family) return {0, true, {}};
  const LagrangianFrame conormal = conormal_frame_t3();
  ChordIndex out;
  out.detail = rs_index(shear_path(gram, conormal), conormal, options);
  out.twice = out.detail.twice;
  out.morse_bott = out.detail.perturbed;
  return out;
}

}  // namespace wb::maslov
