#include <algorithm>
#include <cmath>

#include "workbench/chords.hpp"
#include "workbench/error.hpp"

namespace wb::chords {

namespace {

void require_spd(const Eigen::MatrixXd& g, const char* what) {
  if (g.rows() != g.cols() || g.rows() == 0) throw Error(Errc::not_positive_definite, std::string(what) + ": not square");
  if (!g.allFinite() || (g - g.transpose()).cwiseAbs().maxCoeff() > 1e-12 * std::max(1.0, g.cwiseAbs().maxCoeff())) {
    throw Error(Errc::not_positive_definite, std::string(what) + ": not symmetric");
  }
  Eigen::LLT<Eigen::MatrixXd> llt(g);
  if (llt.info() != Eigen::Success) throw Error(Errc::not_positive_definite, std::string(what) + ": not positive definite");
}

void require_cutoff(double cutoff) {
  if (!(cutoff < 0.0) || !std::isfinite(cutoff)) throw Error(Errc::invalid_cutoff, "action cutoff must be negative");
}

void sort_classes(std::vector<ChordClass>& c) {
  std::stable_sort(c.begin(), c.end(), [](const ChordClass& x, const ChordClass& y) {
    if (x.energy != y.energy) return x.energy < y.energy;
    return x.datum < y.datum;
  });
}

}  // namespace

FlatTorusLattice make_lattice(Eigen::MatrixXd gram, std::vector<std::string> labels) {
  require_spd(gram, "Gram matrix");
  if (labels.empty()) {
    for (int i = 0; i < gram.rows(); ++i) labels.push_back("e" + std::to_string(i + 1));
  }
  if (static_cast<Eigen::Index>(labels.size()) != gram.rows()) throw Error(Errc::invalid_input, "one label per basis vector");
  return {std::move(gram), std::move(labels)};
}

ChordClass make_chord(std::vector<int> datum, double length) {
  const double e = 0.5 * length * length;
  return {std::move(datum), length, e, -e, length == 0.0};
}

std::size_t Spectrum::nonconstant_count() const {
  return std::count_if(classes.begin(), classes.end(), [](const ChordClass& c) { return !c.constant_family; });
}

Spectrum enumerate_cords_T3(double h, double cutoff) {
  if (!(h > 0.0) || !std::isfinite(h)) throw Error(Errc::invalid_input, "vertical period must be positive");
  require_cutoff(cutoff);
  Spectrum s{"t3", cutoff, {}};
  s.classes.push_back(make_chord({0}, 0.0));
  const double bound = -cutoff * (1 + 1e-12);
  for (int k = 1; 0.5 * k * k * h * h <= bound; ++k) {
    s.classes.push_back(make_chord({k}, k * h));
    s.classes.push_back(make_chord({-k}, k * h));
  }
  sort_classes(s.classes);
  return s;
}

Spectrum enumerate_loops_T2(const FlatTorusLattice& lattice, double cutoff) {
  require_spd(lattice.gram, "Gram matrix");
  if (lattice.gram.rows() != 2) throw Error(Errc::invalid_input, "T2 loops need a 2x2 Gram matrix");
  require_cutoff(cutoff);
  const Eigen::Matrix2d g = lattice.gram;
  const Eigen::Matrix2d inv = g.inverse();
  const double bound = -2.0 * cutoff * (1 + 1e-12);
  const int m_max = static_cast<int>(std::floor(std::sqrt(bound * inv(0, 0)))) + 1;
  const int n_max = static_cast<int>(std::floor(std::sqrt(bound * inv(1, 1)))) + 1;
  Spectrum s{"t2", cutoff, {}};
  for (int m = -m_max; m <= m_max; ++m) {
    for (int n = -n_max; n <= n_max; ++n) {
      if (m == 0 && n == 0) continue;
      const Eigen::Vector2d v(m, n);
      const double q = v.dot(g * v);
      if (q <= bound) s.classes.push_back(make_chord({m, n}, std::sqrt(q)));
    }
  }
  sort_classes(s.classes);
  return s;
}

double action_gap(const Spectrum& s) {
  double gap = INFINITY;
  for (const ChordClass& c : s.classes) {
    if (!c.constant_family) gap = std::min(gap, c.energy);
  }
  if (!std::isfinite(gap)) throw Error(Errc::undefined_gap, "spectrum has no nonconstant classes");
  for (const ChordClass& c : s.classes) {
    if (!c.constant_family && !(c.action <= -gap)) throw Error(Errc::numeric_failure, "nonconstant action above -gap");
  }
  return gap;
}

double height_constant(const Spectrum& s) {
  double h = 0.0;
  for (const ChordClass& c : s.classes) h = std::max(h, c.length);
  return h;
}

double lipschitz_constant(const Eigen::MatrixXd& g1, const Eigen::MatrixXd& g2) {
  require_spd(g1, "first metric");
  require_spd(g2, "second metric");
  if (g1.rows() != g2.rows()) throw Error(Errc::invalid_input, "metrics of different dimension");
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(g2, g1);
  const auto& ev = es.eigenvalues();
  return std::max({1.0, ev.maxCoeff(), 1.0 / ev.minCoeff()});
}

}  // namespace wb::chords
