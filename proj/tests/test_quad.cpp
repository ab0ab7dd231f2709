#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "mottlab/quad.hpp"
#include "mottlab/rootfind.hpp"
#include "mottlab/spline.hpp"

using namespace mottlab;

TEST_CASE("gauss legendre integrates polynomials exactly") {
  auto cubic = [](double x) { return 3.0 * x * x * x - x + 2.0; };
  // order n is exact through degree 2n-1
  CHECK(quad::gauss_legendre(cubic, -1.0, 2.0, 4) ==
        doctest::Approx(0.25 * 3.0 * (16.0 - 1.0) - 0.5 * (4.0 - 1.0) + 6.0)
            .epsilon(1e-14));
}

TEST_CASE("tanh-sinh handles endpoint singularity") {
  // int_0^1 1/sqrt(x) dx = 2
  auto f = [](double x) { return 1.0 / std::sqrt(x); };
  const auto r = quad::tanh_sinh(f, 0.0, 1.0, 1e-12);
  CHECK(r.value == doctest::Approx(2.0).epsilon(1e-11));
}

TEST_CASE("tanh-sinh reproduces log-moment integrals") {
  // int_0^{pi/2} cos(u) log^k(1/cos u) du for k = 1, 2
  const double m1 = 1.0 - std::log(2.0);
  const double ln2 = std::log(2.0);
  const double m2 = 2.0 - 2.0 * ln2 + ln2 * ln2 -
                    std::numbers::pi * std::numbers::pi / 12.0;
  auto mk = [](int k) {
    return quad::tanh_sinh(
               [k](double u) {
                 return std::cos(u) * std::pow(-std::log(std::cos(u)), k);
               },
               0.0, 0.5 * std::numbers::pi, 1e-12)
        .value;
  };
  CHECK(mk(1) == doctest::Approx(m1).epsilon(1e-10));
  CHECK(mk(2) == doctest::Approx(m2).epsilon(1e-10));
}

TEST_CASE("adaptive quadrature finds a narrow bump") {
  // Gaussian bump of width 1e-3 somewhere inside a wide interval.
  const double c = 17.347, w = 1e-3;
  auto f = [&](double x) {
    const double z = (x - c) / w;
    return std::exp(-0.5 * z * z);
  };
  const double exact = w * std::sqrt(2.0 * std::numbers::pi);
  const auto r = quad::adaptive(f, 0.0, 40.0, 1e-10, 1e-18);
  CHECK(r.value == doctest::Approx(exact).epsilon(1e-8));
}

TEST_CASE("simpson on tabulated values") {
  const double h = 0.01;
  std::vector<double> v;
  for (int i = 0; i <= 200; ++i) v.push_back(std::sin(i * h));
  CHECK(quad::simpson_uniform(v, h) ==
        doctest::Approx(1.0 - std::cos(2.0)).epsilon(1e-9));
}

TEST_CASE("bisection locates a transcendental root") {
  auto f = [](double x) { return std::cos(x) - x; };
  const double root = rootfind::bisect(f, 0.0, 1.0, 1e-14);
  CHECK(std::abs(std::cos(root) - root) < 1e-13);
}

TEST_CASE("uniform spline interpolates a smooth function") {
  const double step = 0.05;
  std::vector<double> v;
  for (int i = 0; i <= 200; ++i) v.push_back(std::exp(-i * step));
  UniformSpline s(v, step);
  for (double x : {0.123, 1.77, 4.9, 9.2})
    CHECK(s(x) == doctest::Approx(std::exp(-x)).epsilon(1e-6));
}
