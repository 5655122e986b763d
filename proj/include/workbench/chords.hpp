#pragma once

#include <Eigen/Dense>
#include <array>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace wb::chords {

struct FlatTorusLattice {
  Eigen::MatrixXd gram;
  std::vector<std::string> labels;
};

// Rejects non-symmetric or non-positive-definite Gram matrices.
FlatTorusLattice make_lattice(Eigen::MatrixXd gram, std::vector<std::string> labels = {});

struct ChordClass {
  std::vector<int> datum;  // wrap number or lattice vector
  double length = 0.0;
  double energy = 0.0;
  double action = 0.0;
  bool constant_family = false;
};

ChordClass make_chord(std::vector<int> datum, double length);

struct Spectrum {
  std::string model;
  double cutoff = 0.0;
  std::vector<ChordClass> classes;

  std::size_t nonconstant_count() const;
};

Spectrum enumerate_cords_T3(double h, double action_cutoff);
Spectrum enumerate_loops_T2(const FlatTorusLattice& lattice, double action_cutoff);

double action_gap(const Spectrum& spectrum);
// Largest fiber norm |p| over the spectrum; a time-one chord has |p| = length.
double height_constant(const Spectrum& spectrum);

double lipschitz_constant(const Eigen::MatrixXd& g1, const Eigen::MatrixXd& g2);

// Tube metric alpha*e^{-2a}(da^2 + dtheta^2) + beta*dphi^2, made a product for a >= window_end.
struct CylindricalMetricModel {
  double window_start = 1.5;
  double window_end = 2.0;
  double tube_scale = 1.0;
  double fiber_scale = 1.0;
};

CylindricalMetricModel model_for_depth(double i, double tube_scale = 1.0, double fiber_scale = 1.0);

struct MetricCoefficients {
  double aa = 0.0;
  double thth = 0.0;
  double phph = 0.0;
};

double quintic_bump(double s);
MetricCoefficients original_metric(const CylindricalMetricModel& model, double a);
MetricCoefficients adjusted_metric(const CylindricalMetricModel& model, double a);
// Same metric written in r = e^{-a}: coefficients of dr^2, dtheta^2, dphi^2.
MetricCoefficients adjusted_metric_r(const CylindricalMetricModel& model, double r);

struct AdjustmentReport {
  MetricCoefficients far;
  double epsilon1 = 0.0;
  double max_inside_deviation = 0.0;
  double max_far_deviation = 0.0;
  bool monotone = false;
  bool positive = false;
  std::vector<std::pair<double, MetricCoefficients>> samples;
};

AdjustmentReport cylindrical_adjust(const CylindricalMetricModel& model, int samples = 401);

// Sup over a in [a_lo, a_hi] of the pointwise Lipschitz constant between two adjusted metrics.
double adjusted_lipschitz(const CylindricalMetricModel& m1, const CylindricalMetricModel& m2, double a_lo,
                          double a_hi, int samples = 401);

enum class Chart { a, r };

// Product end da^2 + theta_scale dtheta^2 + phi_scale dphi^2.
struct ProductEnd {
  double theta_scale = 1.0;
  double phi_scale = 1.0;
};

// (q1, q2, q3, p1, p2, p3) with q = (a or r, theta, phi).
using PhasePoint = std::array<double, 6>;

double kinetic_hamiltonian(const ProductEnd& end, const PhasePoint& x, Chart chart);
PhasePoint hamiltonian_vector_field(const ProductEnd& end, const PhasePoint& x, Chart chart);
PhasePoint closed_form_field(const ProductEnd& end, const PhasePoint& x, Chart chart);
PhasePoint to_r_chart(const PhasePoint& x);

using Hamiltonian = std::function<double(const PhasePoint&)>;
Hamiltonian flat_quadratic();
Hamiltonian flat_norm();

struct RescaleReport {
  double weight = 1.0;
  double max_residual = 0.0;
  double fiber_scale = 1.0;
  // chord i of H corresponds to chord relabeling[i] of the rescaled problem
  std::vector<std::size_t> relabeling;
  std::vector<double> rescaled_fiber_norms;
};

RescaleReport quadratic_rescale_check(double w, std::span<const PhasePoint> samples,
                                      const Hamiltonian& h = flat_quadratic(), const Spectrum* spectrum = nullptr);

}  // namespace wb::chords
