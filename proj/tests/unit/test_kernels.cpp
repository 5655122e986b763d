#include <doctest.h>

#include <complex>
#include <random>
#include <stdexcept>
#include <vector>

#include "workbench/field_kernels.hpp"

using namespace wb::kernels;

TEST_CASE("vector field kernel matches the scalar kernel") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> coord(-4, 4), height(0.01, 3);
  for (std::size_t count : {0u, 1u, 3u, 4u, 5u, 17u, 1000u}) {
    std::vector<double> xs(count), ys(count), coeffs{0.3, 1.7, 0.9}, poles{0, 1, 2.2};
    for (std::size_t i = 0; i < count; ++i) {
      xs[i] = coord(rng);
      ys[i] = height(rng);
    }
    std::vector<double> re_s(count), im_s(count), re_v(count), im_v(count);
    eval_field(Isa::scalar, {xs, ys, coeffs, poles, re_s, im_s});
    eval_field(Isa::avx2, {xs, ys, coeffs, poles, re_v, im_v});
    for (std::size_t i = 0; i < count; ++i) {
      const std::complex<double> z(xs[i], ys[i]);
      std::complex<double> want = 0;
      for (std::size_t j = 0; j < poles.size(); ++j) want += coeffs[j] / (z - poles[j]);
      CHECK(re_s[i] == doctest::Approx(want.real()).epsilon(1e-13));
      CHECK(im_s[i] == doctest::Approx(want.imag()).epsilon(1e-13));
      CHECK(re_v[i] == doctest::Approx(re_s[i]).epsilon(1e-13));
      CHECK(im_v[i] == doctest::Approx(im_s[i]).epsilon(1e-13));
    }
  }
  MESSAGE("dispatch selects " << isa_name(best_isa()));
}

TEST_CASE("kernel rejects mismatched extents") {
  std::vector<double> xs(3), ys(2), c{1}, p{0}, re(3), im(3);
  CHECK_THROWS_AS(eval_field({xs, ys, c, p, re, im}), std::invalid_argument);
}
