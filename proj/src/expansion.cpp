#include "mottlab/expansion.hpp"

#include <bit>
#include <cmath>
#include <numbers>

#include "mottlab/errors.hpp"
#include "mottlab/quad.hpp"

namespace mottlab::expansion {

namespace {

int popcount(unsigned mask) { return std::popcount(mask); }

std::vector<MarkedPoint> subset(std::span<const MarkedPoint> points,
                                unsigned mask) {
  std::vector<MarkedPoint> out;
  for (std::size_t i = 0; i < points.size(); ++i)
    if (mask & (1u << i)) out.push_back(points[i]);
  return out;
}

}  // namespace

double inclusion_exclusion(const ClusterFunctional& f,
                           std::span<const MarkedPoint> points, int max_size) {
  if (static_cast<int>(points.size()) > max_size)
    throw ConfigError("inclusion_exclusion: point set exceeds size limit");
  const unsigned full = (1u << points.size());
  double total = 0.0;
  for (unsigned y = 0; y < full; ++y) {
    // Iterate every Z <= Y including the empty set.
    unsigned z = y;
    while (true) {
      const int sign_pow = popcount(y) - popcount(z);
      const double value = f.evaluate(subset(points, z));
      total += (sign_pow % 2 == 0) ? value : -value;
      if (z == 0) break;
      z = (z - 1) & y;
    }
  }
  return total;
}

double cluster_term(const ClusterFunctional& f,
                    std::span<const MarkedPoint> points, int max_size) {
  if (static_cast<int>(points.size()) > max_size)
    throw ConfigError("cluster_term: point set exceeds size limit");
  const unsigned full = (1u << points.size());
  const int n = static_cast<int>(points.size());
  double total = 0.0;
  for (unsigned z = 0; z < full; ++z) {
    const double value = f.evaluate(subset(points, z));
    total += ((n - popcount(z)) % 2 == 0) ? value : -value;
  }
  return total;
}

DensityProfile DensityProfile::gaussian(double total_density, double center,
                                        double sigma) {
  DensityProfile p;
  p.total_density = total_density;
  p.amplitude_density = [center, sigma](double g) {
    const double z = (g - center) / sigma;
    return std::exp(-0.5 * z * z) /
           (sigma * std::sqrt(2.0 * std::numbers::pi));
  };
  p.sample = [center, sigma](Rng& rng) {
    double g = rng.normal(center, sigma);
    while (!(g > 0.0)) g = rng.normal(center, sigma);
    return g;
  };
  p.support_lo = std::max(0.0, center - 8.0 * sigma);
  p.support_hi = center + 8.0 * sigma;
  return p;
}

DensityProfile DensityProfile::uniform(double total_density, double lo,
                                       double hi) {
  if (!(hi > lo) || !(lo >= 0.0))
    throw InvalidParameter("amplitude_density", "uniform needs 0 <= lo < hi");
  DensityProfile p;
  p.total_density = total_density;
  p.amplitude_density = [lo, hi](double g) {
    return (g >= lo && g <= hi) ? 1.0 / (hi - lo) : 0.0;
  };
  p.sample = [lo, hi](Rng& rng) { return rng.uniform(lo, hi); };
  p.support_lo = lo;
  p.support_hi = hi;
  return p;
}

double dos_one_well(double energy, const DensityProfile& profile,
                    const model::WellProfile& well) {
  if (!(energy < 0.0))
    throw InvalidParameter("energy", "one-well DOS is defined for E < 0");
  double rho = 0.0;
  for (double eps : well.negative_levels)
    rho += profile.density_at(energy / eps) / std::abs(eps);
  return rho;
}

namespace {

double sphere_area(int d) {
  switch (d) {
    case 1:
      return 2.0;
    case 2:
      return 2.0 * std::numbers::pi;
    case 3:
      return 4.0 * std::numbers::pi;
    default:
      throw InvalidParameter("dimension", "supported dimensions are 1, 2, 3");
  }
}

/// Amplitude-space integral of the pair-level counting bracket at fixed
/// overlap I: both windows have width sqrt(delta^2+I^2) - delta <= I.
double amplitude_bracket(double energy, const DensityProfile& profile,
                         double overlap, const TwoWellOptions& opts) {
  if (overlap <= 0.0) return 0.0;
  const double me = -energy;  // characteristic amplitude
  const double lo = profile.support_lo;
  const double hi = profile.support_hi;
  const double delta_max =
      std::max({0.5 * (me - lo), 0.5 * (hi - me), 0.0}) + overlap;
  if (delta_max <= 0.0) return 0.0;

  auto pair_weight = [&](double g, double delta) {
    return profile.density_at(g + delta) * profile.density_at(g - delta);
  };
  const auto& inner = quad::gauss_legendre_rule(4);

  auto window = [&](double g_lo, double g_hi, double delta) {
    const double mid = 0.5 * (g_lo + g_hi);
    const double half = 0.5 * (g_hi - g_lo);
    double sum = 0.0;
    for (std::size_t i = 0; i < inner.nodes.size(); ++i)
      sum += inner.weights[i] * pair_weight(mid + half * inner.nodes[i], delta);
    return half * sum;
  };

  // delta = I sinh(v) resolves both the width-I region near delta = 0 and
  // the I^2/(2 delta) tail on one smooth scale.
  auto integrand_v = [&](double v) {
    const double delta = overlap * std::sinh(v);
    const double s = overlap * std::cosh(v);
    const double lower = window(me - s, me - delta, delta);
    const double upper = window(me + delta, me + s, delta);
    return (lower - upper) * overlap * std::cosh(v);
  };

  const double v_max = std::asinh(delta_max / overlap);
  const int panels = std::max(4, static_cast<int>(std::ceil(v_max)));
  const auto& rule = quad::gauss_legendre_rule(opts.gauss_order);
  double total = 0.0;
  const double dv = v_max / panels;
  for (int p = 0; p < panels; ++p) {
    const double a = p * dv;
    const double mid = a + 0.5 * dv;
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
      sum += rule.weights[i] * integrand_v(mid + 0.5 * dv * rule.nodes[i]);
    total += 0.5 * dv * sum;
  }
  return 4.0 * total;
}

}  // namespace

double integrated_two_well_count(double energy, const DensityProfile& profile,
                                 const model::RegimeParams& regime,
                                 const TwoWellOptions& opts) {
  if (!(energy < 0.0))
    throw InvalidParameter("energy", "counting correction needs E < 0");
  const double i0 = regime.overlap_amplitude;
  if (i0 <= 0.0) return 0.0;
  const double rl = regime.localization_radius;
  const double cut = opts.overlap_tail_cut * std::abs(energy);
  if (i0 <= cut) return 0.0;
  const double y_max = rl * std::log(i0 / cut);

  auto radial = [&](double y) {
    const double overlap = i0 * std::exp(-y / rl);
    const double jac = (regime.dimension == 1)
                           ? 1.0
                           : std::pow(y, regime.dimension - 1);
    return jac * amplitude_bracket(energy, profile, overlap, opts);
  };

  const int panels = std::max(
      8, static_cast<int>(std::ceil(y_max / rl)) * opts.radial_panels_per_rl);
  const auto& rule = quad::gauss_legendre_rule(opts.gauss_order);
  double total = 0.0;
  const double dy = y_max / panels;
  for (int p = 0; p < panels; ++p) {
    const double mid = (p + 0.5) * dy;
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
      sum += rule.weights[i] * radial(mid + 0.5 * dy * rule.nodes[i]);
    total += 0.5 * dy * sum;
  }
  return sphere_area(regime.dimension) * total;
}

double dos_two_well_correction(double energy, const DensityProfile& profile,
                               const model::RegimeParams& regime,
                               const TwoWellOptions& opts) {
  const double h = opts.energy_step_factor * std::abs(energy);
  const double upper =
      integrated_two_well_count(energy + h, profile, regime, opts);
  const double lower =
      integrated_two_well_count(energy - h, profile, regime, opts);
  return (upper - lower) / (2.0 * h);
}

DosCurve dos_curve(std::span<const double> energies,
                   const DensityProfile& profile,
                   const model::WellProfile& well,
                   const model::RegimeParams& regime,
                   const TwoWellOptions& opts) {
  DosCurve curve;
  curve.total_density = profile.total_density;
  for (double e : energies) {
    curve.energy.push_back(e);
    curve.rho1.push_back(dos_one_well(e, profile, well));
    curve.rho2.push_back(dos_two_well_correction(e, profile, regime, opts));
  }
  return curve;
}

}  // namespace mottlab::expansion
