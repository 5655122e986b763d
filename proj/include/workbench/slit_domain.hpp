#pragma once

#include <array>
#include <complex>
#include <functional>
#include <span>
#include <vector>

namespace wb::slit {

using cplx = std::complex<double>;

// w0 is always the computed sum of the inputs.
class Weights {
 public:
  static Weights from_inputs(std::vector<double> inputs);

  double w0() const { return w0_; }
  std::span<const double> inputs() const { return inputs_; }
  double input(int j) const { return inputs_.at(j - 1); }
  int k() const { return static_cast<int>(inputs_.size()); }

  friend bool operator==(const Weights&, const Weights&) = default;

 private:
  explicit Weights(std::vector<double> inputs);
  std::vector<double> inputs_;
  double w0_ = 0.0;
};

// u #^i v: replace input i of v by the inputs of u.
Weights concatenate(const Weights& u, const Weights& v, int i);

struct SlitDomain {
  Weights weights;
  std::vector<double> punctures;
  std::vector<double> critical_points;
  std::vector<double> slit_params;
  std::vector<double> levels;
};

cplx map_value(const SlitDomain& domain, cplx z);
cplx map_derivative(const SlitDomain& domain, cplx z);

// Translate and scale so that a1 = 0 and a2 = 1.
std::vector<double> normalize_punctures(std::span<const double> punctures);

SlitDomain build_slit_map(const Weights& weights, std::span<const double> punctures);

struct InvertOptions {
  double tol = 1e-12;
  int max_iterations = 200;
};

SlitDomain invert_slit_params(const Weights& weights, std::span<const double> target_slits,
                                  const InvertOptions& options = {});

struct OneFormValue {
  double beta_x = 0.0;
  double beta_y = 0.0;
  double beta_j_x = 0.0;
  double beta_j_y = 0.0;
};

OneFormValue eval_beta(const SlitDomain& domain, cplx z);

// Extra (dx, dy) components added to beta, used for negative controls.
using FormTerm = std::function<std::array<double, 2>(double x, double y)>;

struct VerifyOptions {
  double end_depth = 10.0;
  int end_samples = 33;
  FormTerm extra_term;
};

struct VerificationReport {
  int grid_density = 0;
  double tol = 0.0;
  double max_d_beta = 0.0;
  double max_d_beta_j = 0.0;
  double max_boundary_tangential = 0.0;
  // index 0 is the output end, index j the j-th input end
  std::vector<double> end_deviation;
  double max_end_deviation = 0.0;
  bool pass = false;
};

VerificationReport verify_beta_conditions(const SlitDomain& domain, int grid_density, double tol,
                                          const VerifyOptions& options = {});

// Slit configuration the glued domain converges to as the gluing length grows.
std::vector<double> glued_limit_slits(const SlitDomain& u, const SlitDomain& v, int i,
                                      double gluing_length);

SlitDomain glue_slit_domains(const SlitDomain& u, const SlitDomain& v, int i,
                                 double gluing_length);

}  // namespace wb::slit
