#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "mottlab/errors.hpp"
#include "mottlab/model.hpp"
#include "mottlab/quad.hpp"
#include "mottlab/tridiag.hpp"

using namespace mottlab;
using namespace mottlab::model;

namespace {

/// Finite-difference ground energy of the dimensionless well -2 sech^2 x.
double poschl_teller_ground(double h, double box) {
  const auto n = static_cast<std::size_t>(std::round(2.0 * box / h)) - 1;
  std::vector<double> diag(n), off(n - 1, -1.0 / (h * h));
  for (std::size_t i = 0; i < n; ++i) {
    const double x = -box + h * static_cast<double>(i + 1);
    const double s = 1.0 / std::cosh(x);
    diag[i] = 2.0 / (h * h) - 2.0 * s * s;
  }
  return tridiag::eigenvalues_in_range(diag, off, -10.0, -1e-9).front();
}

}  // namespace

TEST_CASE("ground states are normalized with unit decay rate") {
  for (const auto& well :
       {WellProfile::poschl_teller(), WellProfile::delta(),
        WellProfile::exponential(2), WellProfile::exponential(3)}) {
    const int d = well.dimension;
    double norm = quad::tanh_sinh(
                      [&](double r) {
                        const double p = well.ground_state(r);
                        double jac = 1.0;
                        if (d == 2) jac = 2.0 * std::numbers::pi * r;
                        if (d == 3) jac = 4.0 * std::numbers::pi * r * r;
                        return p * p * jac;
                      },
                      0.0, 60.0, 1e-12)
                      .value;
    if (d == 1) norm *= 2.0;  // radial integral covers half the line
    CHECK(norm == doctest::Approx(1.0).epsilon(1e-9));
    // Exponential tail with rate 1.
    const double tail =
        std::log(well.ground_state(8.0) / well.ground_state(10.0)) / 2.0;
    CHECK(tail == doctest::Approx(1.0).epsilon(1e-3));
  }
}

TEST_CASE("poschl-teller ground energy converges to -1 at O(h^2)") {
  const double e1 = poschl_teller_ground(0.08, 20.0);
  const double e2 = poschl_teller_ground(0.04, 20.0);
  CHECK(e1 == doctest::Approx(-1.0).epsilon(2e-3));
  CHECK(e2 == doctest::Approx(-1.0).epsilon(5e-4));
  // halving h divides the error by about 4
  CHECK(std::abs(e1 + 1.0) / std::abs(e2 + 1.0) ==
        doctest::Approx(4.0).epsilon(0.25));
}

TEST_CASE("level lists enforce the eps_1 = -1 normalization") {
  const auto well = WellProfile::poschl_teller();
  CHECK_NOTHROW(well.with_levels({-1.0, -0.25}));
  CHECK_THROWS_AS(well.with_levels({-0.5}), InvalidParameter);
  CHECK_THROWS_AS(well.with_levels({-1.0, 0.5}), InvalidParameter);
}

TEST_CASE("regime defaults satisfy r_l^2 |E_F| = 1") {
  const auto p = RegimeParams::defaults(2, -4.0, 1e-5);
  CHECK(p.localization_radius * p.localization_radius *
            std::abs(p.fermi_energy) ==
        doctest::Approx(1.0).epsilon(1e-15));
  CHECK(p.overlap_amplitude == doctest::Approx(4.0));
}

TEST_CASE("validate_regime: figure-1 parameters pass") {
  auto p = RegimeParams::defaults(1, -1.0, 1e-4);
  p.well_density = 1e-3;
  p.well_radius = 0.01;
  const auto rep = validate_regime(p);
  CHECK(rep.pass);
  CHECK(rep.checks[0].ratio == doctest::Approx(1e-4));
}

TEST_CASE("validate_regime: nu of order |E_F| fails the base condition") {
  auto p = RegimeParams::defaults(1, -1.0, 1.0);
  p.well_density = 1e-3;
  p.well_radius = 0.01;
  const auto rep = validate_regime(p);
  CHECK_FALSE(rep.pass);
  CHECK_FALSE(rep.checks[0].pass);
  CHECK(rep.checks[0].ratio == doctest::Approx(1.0));
}

TEST_CASE("validate_regime: localization radius vs spacing ratio") {
  auto p = RegimeParams::defaults(1, -1.0, 1e-4);
  p.well_density = 1e-6;
  p.well_radius = 0.0;
  const auto rep = validate_regime(p);
  CHECK(rep.checks[2].ratio == doctest::Approx(1e-6).epsilon(1e-12));
  CHECK(rep.checks[2].pass);
}

TEST_CASE("validate_regime rejects ill-formed inputs naming the field") {
  auto p = RegimeParams::defaults(1, -1.0, 1e-4);
  p.frequency = -1.0;
  try {
    validate_regime(p);
    FAIL("expected InvalidParameter");
  } catch (const InvalidParameter& e) {
    CHECK(e.field() == "frequency");
  }
  p = RegimeParams::defaults(1, -1.0, 1e-4);
  p.fermi_energy = 0.5;
  CHECK_THROWS_AS(validate_regime(p), InvalidParameter);
  p = RegimeParams::defaults(1, -1.0, 1e-4);
  p.well_density = std::nan("");
  CHECK_THROWS_AS(validate_regime(p), InvalidParameter);
}
