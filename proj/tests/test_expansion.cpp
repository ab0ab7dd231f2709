#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "mottlab/errors.hpp"
#include "mottlab/expansion.hpp"
#include "mottlab/rng.hpp"
#include "mottlab/twowell.hpp"

using namespace mottlab;
using namespace mottlab::expansion;

namespace {

double dist(const MarkedPoint& a, const MarkedPoint& b) {
  double s = 0.0;
  for (int i = 0; i < 3; ++i)
    s += (a.position[i] - b.position[i]) * (a.position[i] - b.position[i]);
  return std::sqrt(s);
}

}  // namespace

TEST_CASE("inclusion-exclusion identity: empty and single point") {
  ClusterFunctional constant{[](std::span<const MarkedPoint>) { return 7.5; }};
  CHECK(inclusion_exclusion(constant, {}) == doctest::Approx(7.5));

  ClusterFunctional additive{[](std::span<const MarkedPoint> pts) {
    double s = 0.0;
    for (const auto& p : pts) s += p.amplitude;
    return s;
  }};
  std::vector<MarkedPoint> one{{{1.0, 0.0, 0.0}, 3.25}};
  CHECK(inclusion_exclusion(additive, one) == doctest::Approx(3.25));
}

TEST_CASE("inclusion-exclusion reproduces a random functional on 3 points") {
  // Hash-valued F: arbitrary but deterministic on every subset.
  ClusterFunctional random_f{[](std::span<const MarkedPoint> pts) {
    double v = 0.37;
    for (const auto& p : pts)
      v += std::sin(13.7 * p.position[0] + 3.1 * p.amplitude) * 0.77 +
           0.11 * p.amplitude;
    return std::cos(v);
  }};
  std::vector<MarkedPoint> pts{{{0.3, 0.0, 0.0}, 1.1},
                               {{-1.2, 0.0, 0.0}, 0.7},
                               {{2.4, 0.0, 0.0}, 1.9}};
  const double direct = random_f.evaluate(pts);
  CHECK(inclusion_exclusion(random_f, pts) ==
        doctest::Approx(direct).epsilon(1e-12));
}

TEST_CASE("inclusion-exclusion size limit") {
  ClusterFunctional constant{[](std::span<const MarkedPoint>) { return 0.0; }};
  std::vector<MarkedPoint> pts(7);
  CHECK_THROWS_AS(inclusion_exclusion(constant, pts), ConfigError);
}

TEST_CASE("cluster term vanishes for non-interacting wells") {
  // Counting functional of decoupled levels: purely additive over points.
  ClusterFunctional count_below{[](std::span<const MarkedPoint> pts) {
    double n = 0.0;
    for (const auto& p : pts)
      if (-p.amplitude < -0.5) n += 1.0;
    return n;
  }};
  std::vector<MarkedPoint> pair{{{0.0, 0.0, 0.0}, 1.0},
                                {{5.0, 0.0, 0.0}, 0.9}};
  CHECK(cluster_term(count_below, pair) == doctest::Approx(0.0));

  // With pair levels from the projection, the same functional interacts.
  ClusterFunctional coupled{[](std::span<const MarkedPoint> pts) {
    if (pts.size() == 2) {
      twowell::PairConfig cfg;
      cfg.g1 = std::max(pts[0].amplitude, pts[1].amplitude);
      cfg.g2 = std::min(pts[0].amplitude, pts[1].amplitude);
      cfg.separation = dist(pts[0], pts[1]);
      cfg.overlap = std::exp(-cfg.separation);
      const auto s = twowell::pair_levels(cfg);
      return (s.level_lower < -0.95 ? 1.0 : 0.0) +
             (s.level_upper < -0.95 ? 1.0 : 0.0);
    }
    double n = 0.0;
    for (const auto& p : pts)
      if (-p.amplitude < -0.95) n += 1.0;
    return n;
  }};
  std::vector<MarkedPoint> close{{{0.0, 0.0, 0.0}, 1.0},
                                 {{1.0, 0.0, 0.0}, 0.96}};
  CHECK(cluster_term(coupled, close) != doctest::Approx(0.0));
}

TEST_CASE("one-well DOS term by term") {
  const auto well = model::WellProfile::poschl_teller();
  auto profile = DensityProfile::gaussian(2.5, 1.0, 0.1);

  SUBCASE("single level reduces to mu(-E)") {
    const double e = -2.0;
    CHECK(dos_one_well(e, profile, well) ==
          doctest::Approx(profile.density_at(2.0)).epsilon(1e-14));
  }
  SUBCASE("two-level well") {
    const auto two = well.with_levels({-1.0, -0.25});
    const double expected =
        profile.density_at(1.0) + 4.0 * profile.density_at(4.0);
    CHECK(dos_one_well(-1.0, profile, two) ==
          doctest::Approx(expected).epsilon(1e-14));
  }
  SUBCASE("outside the amplitude support") {
    auto uni = DensityProfile::uniform(1.0, 1.0, 2.0);
    CHECK(dos_one_well(-3.0, uni, well) == doctest::Approx(0.0));
  }
  SUBCASE("E >= 0 is a domain error") {
    CHECK_THROWS_AS(dos_one_well(0.5, profile, well), InvalidParameter);
  }
}

namespace {

/// Monte Carlo histogram of the pair levels minus the decoupled levels,
/// sampled over (y, g1, g2); oracle for the quadrature rho^(2).
double mc_two_well_rho(double energy, const DensityProfile& profile,
                       const model::RegimeParams& regime, double bin_width,
                       std::size_t samples, std::uint64_t seed,
                       double* stderr_out) {
  Rng rng(seed);
  const double y_max = regime.localization_radius *
                       std::log(regime.overlap_amplitude /
                                (1e-14 * std::abs(energy)));
  const double lo = energy - 0.5 * bin_width;
  const double hi = energy + 0.5 * bin_width;
  double sum = 0.0, sum2 = 0.0;
  for (std::size_t i = 0; i < samples; ++i) {
    const double y = rng.uniform(0.0, y_max);
    const double ga = profile.sample(rng);
    const double gb = profile.sample(rng);
    twowell::PairConfig cfg;
    cfg.g1 = std::max(ga, gb);
    cfg.g2 = std::min(ga, gb);
    cfg.separation = y;
    cfg.overlap = regime.overlap_amplitude *
                  std::exp(-y / regime.localization_radius);
    const auto s = twowell::pair_levels(cfg);
    double c = 0.0;
    auto in_bin = [&](double e) { return e >= lo && e < hi; };
    c += in_bin(s.level_lower) ? 1.0 : 0.0;
    c += in_bin(s.level_upper) ? 1.0 : 0.0;
    c -= in_bin(-cfg.g1) ? 1.0 : 0.0;
    c -= in_bin(-cfg.g2) ? 1.0 : 0.0;
    sum += c;
    sum2 += c * c;
  }
  const double mean = sum / static_cast<double>(samples);
  const double var =
      (sum2 / static_cast<double>(samples) - mean * mean) /
      static_cast<double>(samples);
  // d = 1: int dy over the line is 2 * int_0^ymax; amplitudes carry mu each.
  const double scale = 2.0 * y_max * profile.total_density *
                       profile.total_density / bin_width;
  if (stderr_out) *stderr_out = std::sqrt(std::max(var, 0.0)) * scale;
  return mean * scale;
}

}  // namespace

TEST_CASE("two-well DOS correction") {
  auto regime = model::RegimeParams::defaults(1, -1.0, 1e-4);
  auto profile = DensityProfile::gaussian(1e-3, 1.0, 0.1);

  SUBCASE("vanishes identically with overlap disabled") {
    auto off = regime;
    off.overlap_amplitude = 0.0;
    CHECK(dos_two_well_correction(-1.0, profile, off) == doctest::Approx(0.0));
  }

  SUBCASE("scales as the density squared") {
    const double r1 = dos_two_well_correction(-1.0, profile, regime);
    const double r2 =
        dos_two_well_correction(-1.0, profile.rescaled(3e-3), regime);
    CHECK(r2 / r1 == doctest::Approx(9.0).epsilon(1e-9));
  }

  SUBCASE("matches the Monte Carlo level histogram") {
    const double rho2 = dos_two_well_correction(-1.0, profile, regime);
    double err = 0.0;
    const double mc = mc_two_well_rho(-1.0, profile, regime, 0.02, 400000,
                                      20240817ULL, &err);
    CHECK(std::abs(mc - rho2) < 3.0 * err + 1e-3 * std::abs(rho2));
    CHECK(rho2 != doctest::Approx(0.0));
  }

  SUBCASE("ratio rho2/rho1 has log-log slope 1 in mu") {
    const auto well = model::WellProfile::poschl_teller();
    std::vector<double> log_mu, log_ratio;
    for (double mu : {1e-4, 1e-3, 1e-2}) {
      auto p = profile.rescaled(mu);
      const double r1 = dos_one_well(-1.0, p, well);
      const double r2 = dos_two_well_correction(-1.0, p, regime);
      log_mu.push_back(std::log(mu));
      log_ratio.push_back(std::log(std::abs(r2) / r1));
    }
    const double slope = (log_ratio.back() - log_ratio.front()) /
                         (log_mu.back() - log_mu.front());
    CHECK(std::abs(slope - 1.0) < 0.1);
  }
}
