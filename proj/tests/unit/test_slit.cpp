#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "workbench/error.hpp"
#include "workbench/slit_domain.hpp"

using namespace wb::slit;
using wb::Errc;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const wb::Error& e) {
    return e.code();
  }
  return Errc::usage;
}

SlitDomain symmetric_pair() { return build_slit_map(Weights::from_inputs({1, 1}), std::vector<double>{0, 1}); }

}  // namespace

TEST_CASE("weights store the computed sum and reject non-positive entries") {
  const auto w = Weights::from_inputs({0.5, 1.25, 2});
  CHECK(w.w0() == 0.5 + 1.25 + 2);
  CHECK(w.k() == 3);
  CHECK(code_of([] { Weights::from_inputs({1, 0}); }) == Errc::invalid_input);
  CHECK(code_of([] { Weights::from_inputs({}); }) == Errc::invalid_input);
  CHECK(concatenate(Weights::from_inputs({1, 1}), Weights::from_inputs({2, 1}), 1) == Weights::from_inputs({1, 1, 1}));
  CHECK(code_of([] { concatenate(Weights::from_inputs({1, 1}), Weights::from_inputs({1, 1}), 1); }) ==
        Errc::incompatible_weights);
}

TEST_CASE("weight concatenation is associative where defined") {
  const auto a = Weights::from_inputs({0.5, 0.5});
  const auto b = Weights::from_inputs({1.0, 2.0});
  const auto c = Weights::from_inputs({3.0, 4.0});
  CHECK(concatenate(concatenate(a, b, 1), c, 1) == concatenate(a, concatenate(b, c, 1), 1));
}

TEST_CASE("balanced pair has its critical point at one half") {
  const auto domain = symmetric_pair();
  REQUIRE(domain.critical_points.size() == 1);
  CHECK(domain.critical_points[0] == 0.5);
  CHECK(domain.slit_params[0] == doctest::Approx(-2 * std::numbers::ln2 / std::numbers::pi).epsilon(1e-14));
  CHECK(domain.levels == std::vector<double>{1.0});
  CHECK(std::imag(map_value(domain, {0.5, 0})) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("single strip has no slits") {
  const auto domain = build_slit_map(Weights::from_inputs({1.5}), std::vector<double>{0});
  CHECK(domain.slit_params.empty());
  CHECK(domain.critical_points.empty());
  CHECK(std::imag(map_value(domain, {-3, 0})) == doctest::Approx(1.5));
  CHECK(std::imag(map_value(domain, {4, 0})) == 0.0);
}

TEST_CASE("boundary values drop by the input weight across each puncture") {
  const auto w = Weights::from_inputs({0.7, 1.9, 1.1});
  const std::vector<double> a{0, 1, 2.6};
  const auto domain = build_slit_map(w, a);
  CHECK(std::imag(map_value(domain, {-5, 0})) == doctest::Approx(w.w0()).epsilon(1e-13));
  CHECK(std::imag(map_value(domain, {0.5, 0})) == doctest::Approx(1.9 + 1.1).epsilon(1e-13));
  CHECK(std::imag(map_value(domain, {2, 0})) == doctest::Approx(1.1).epsilon(1e-13));
  CHECK(std::imag(map_value(domain, {9, 0})) == 0.0);
  REQUIRE(domain.critical_points.size() == 2);
  for (std::size_t l = 0; l < 2; ++l) {
    CHECK(domain.critical_points[l] > a[l]);
    CHECK(domain.critical_points[l] < a[l + 1]);
    CHECK(std::abs(map_derivative(domain, {domain.critical_points[l], 0})) < 1e-9);
    CHECK(std::imag(map_value(domain, {domain.critical_points[l], 0})) == doctest::Approx(domain.levels[l]).epsilon(1e-12));
  }
}

TEST_CASE("punctures are validated and normalized") {
  CHECK(code_of([] { build_slit_map(Weights::from_inputs({1, 1}), std::vector<double>{0, 0}); }) ==
        Errc::invalid_domain);
  CHECK(code_of([] { build_slit_map(Weights::from_inputs({1, 1}), std::vector<double>{1, 0}); }) ==
        Errc::invalid_domain);
  const auto n = normalize_punctures(std::vector<double>{2, 4, 7});
  CHECK(n == std::vector<double>{0, 1, 2.5});
}

TEST_CASE("beta agrees with finite differences of the map") {
  const auto domain = build_slit_map(Weights::from_inputs({0.8, 1.3, 0.6}), std::vector<double>{0, 1, 1.7});
  for (std::complex<double> z : {std::complex<double>{0, 1}, {0.4, 0.3}, {-2, 0.8}, {1.35, 0.05}, {5, 3}}) {
    const auto exact = eval_beta(domain, z);
    const auto fd = wb::oracle::finite_difference_beta(domain, z);
    CHECK(exact.beta_x == doctest::Approx(fd.beta_x).epsilon(1e-7));
    CHECK(exact.beta_y == doctest::Approx(fd.beta_y).epsilon(1e-7));
    CHECK(exact.beta_j_x == doctest::Approx(fd.beta_j_x).epsilon(1e-7));
    CHECK(exact.beta_j_y == doctest::Approx(fd.beta_j_y).epsilon(1e-7));
  }
}

TEST_CASE("beta at i for the balanced pair") {
  const auto b = eval_beta(symmetric_pair(), {0, 1});
  const auto fd = wb::oracle::finite_difference_beta(symmetric_pair(), {0, 1});
  CHECK(b.beta_x == doctest::Approx(fd.beta_x).epsilon(1e-8));
  CHECK(b.beta_y == doctest::Approx(fd.beta_y).epsilon(1e-8));
}

TEST_CASE("beta has no tangential part on the boundary and is singular at punctures") {
  const auto domain = symmetric_pair();
  for (double x : {-3.0, 0.25, 0.5, 0.9, 12.0}) CHECK(eval_beta(domain, {x, 0}).beta_x == 0.0);
  CHECK(code_of([&] { eval_beta(domain, {1, 0}); }) == Errc::singular_point);
}

TEST_CASE("verification passes on closed forms and catches a corrupted form") {
  const auto domain = symmetric_pair();
  const auto rep = verify_beta_conditions(domain, 60, 1e-9);
  CHECK(rep.pass);
  CHECK(rep.max_end_deviation < 1e-6);
  CHECK(rep.end_deviation.size() == 3);

  const auto strip = verify_beta_conditions(build_slit_map(Weights::from_inputs({2}), std::vector<double>{0}), 40, 1e-12);
  CHECK(strip.pass);
  CHECK(strip.max_boundary_tangential == 0.0);

  VerifyOptions bad;
  bad.extra_term = [](double x, double) { return std::array<double, 2>{0.0, 1e-3 * x}; };
  CHECK_FALSE(verify_beta_conditions(domain, 60, 1e-9, bad).pass);
}

TEST_CASE("inversion recovers punctures") {
  const auto target = -2 * std::numbers::ln2 / std::numbers::pi;
  const auto domain = invert_slit_params(Weights::from_inputs({1, 1}), std::vector<double>{target});
  CHECK(domain.punctures[0] == 0.0);
  CHECK(domain.punctures[1] == doctest::Approx(1.0).epsilon(1e-10));

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> weight(0.5, 2.5), gap(0.4, 2.0);
  for (int i = 0; i < 10; ++i) {
    const auto w = Weights::from_inputs({weight(rng), weight(rng), weight(rng)});
    const std::vector<double> a{0, 1, 1 + gap(rng)};
    const auto back = invert_slit_params(w, build_slit_map(w, a).slit_params);
    for (int j = 0; j < 3; ++j) CHECK(back.punctures[j] == doctest::Approx(a[j]).epsilon(1e-9));
  }
}

TEST_CASE("gluing concatenates weights and converges to the limit configuration") {
  const auto u = symmetric_pair();
  const auto v = build_slit_map(Weights::from_inputs({2, 1}), std::vector<double>{0, 1});
  const auto glued = glue_slit_domains(u, v, 1, 4.0);
  CHECK(glued.weights == Weights::from_inputs({1, 1, 1}));
  double previous = INFINITY;
  for (double length = 2; length <= 16; length *= 2) {
    const auto g = glue_slit_domains(u, v, 1, length);
    const auto limit = glued_limit_slits(u, v, 1, length);
    REQUIRE(limit.size() == g.slit_params.size());
    double residual = 0;
    for (std::size_t l = 0; l < limit.size(); ++l) residual = std::max(residual, std::abs(limit[l] - g.slit_params[l]));
    CHECK(residual < previous);
    previous = residual;
  }
  CHECK(previous < 1e-6);
  CHECK(code_of([&] { glue_slit_domains(v, u, 1, 2.0); }) == Errc::incompatible_weights);

  const auto strip = build_slit_map(Weights::from_inputs({1}), std::vector<double>{0});
  CHECK(glue_slit_domains(strip, v, 2, 3.0).weights == v.weights);
}
