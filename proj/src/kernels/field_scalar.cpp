#include "workbench/field_kernels.hpp"

namespace wb::kernels {

void field_scalar(const FieldBatch& b) {
  const std::size_t n = b.xs.size();
  const std::size_t terms = b.coeffs.size();
  for (std::size_t i = 0; i < n; ++i) {
    double re = 0.0;
    double im = 0.0;
    for (std::size_t j = 0; j < terms; ++j) {
      const double dx = b.xs[i] - b.poles[j];
      const double dy = b.ys[i];
      const double q = b.coeffs[j] / (dx * dx + dy * dy);
      re = re + q * dx;
      im = im - q * dy;
    }
    b.re[i] = re;
    b.im[i] = im;
  }
}

}  // namespace wb::kernels
