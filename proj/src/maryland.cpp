#include "mottlab/maryland.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mottlab/errors.hpp"

namespace mottlab::maryland {

namespace {

constexpr double kPi = std::numbers::pi;

void check_params(const MarylandParams& p) {
  if (!(p.coupling > 0.0))
    throw InvalidParameter("coupling", "must be positive");
  if (p.dimension < 1 || p.dimension > 2)
    throw InvalidParameter("dimension", "maryland supports d = 1, 2");
}

/// Hopping symbol values over the torus quadrature grid (normalized
/// measure); the trapezoid rule is spectrally accurate for periodic
/// integrands.
std::vector<double> hopping_table(const MarylandParams& p) {
  std::vector<double> w;
  if (p.dimension == 1) {
    const int n = p.torus_nodes_1d;
    w.reserve(n);
    for (int i = 0; i < n; ++i)
      w.push_back(2.0 * std::cos(2.0 * kPi * i / n));
  } else {
    const int n = p.torus_nodes_2d;
    w.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        w.push_back(2.0 * (std::cos(2.0 * kPi * i / n) +
                           std::cos(2.0 * kPi * j / n)));
  }
  return w;
}

double dos_from_table(double energy, double g,
                      const std::vector<double>& w) {
  double sum = 0.0;
  for (double wk : w) {
    const double d = wk - energy;
    sum += g / (d * d + g * g);
  }
  return sum / (kPi * static_cast<double>(w.size()));
}

double n_from_table(double energy, double g, const std::vector<double>& w) {
  double sum = 0.0;
  for (double wk : w) sum += std::atan((energy - wk) / g);
  return 0.5 + sum / (kPi * static_cast<double>(w.size()));
}

double invert_from_table(double target, double g,
                         const std::vector<double>& w, int dimension) {
  if (!(target > 0.0) || !(target < 1.0))
    throw RegimeError(
        "integrated DOS inversion: target on the boundary, level unbounded");
  // Cauchy quantile plus band edge gives a safe starting bracket.
  const double band = 2.0 * dimension;
  double span = band + g * std::max(1.0, std::abs(std::tan(
                                              kPi * (target - 0.5))));
  double lo = -span, hi = span;
  while (n_from_table(lo, g, w) > target) lo *= 2.0;
  while (n_from_table(hi, g, w) < target) hi *= 2.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double nm = n_from_table(mid, g, w);
    if (std::abs(nm - target) < 1e-12) return mid;
    (nm < target ? lo : hi) = mid;
    if (hi - lo < 1e-15 * (1.0 + std::abs(mid))) break;
  }
  return 0.5 * (lo + hi);
}

double fractional(double x) { return x - std::floor(x); }

double phase_of_site(const std::array<long, 2>& site,
                     const MarylandParams& p) {
  double a = p.alpha[0] * static_cast<double>(site[0]) + p.omega;
  if (p.dimension == 2) a += p.alpha[1] * static_cast<double>(site[1]);
  return fractional(a);
}

}  // namespace

double golden_alpha() { return 0.5 * (std::sqrt(5.0) - 1.0); }

double dos(double energy, const MarylandParams& params) {
  check_params(params);
  return dos_from_table(energy, params.coupling, hopping_table(params));
}

double integrated_dos(double energy, const MarylandParams& params) {
  check_params(params);
  return n_from_table(energy, params.coupling, hopping_table(params));
}

double invert_integrated_dos(double target, const MarylandParams& params) {
  check_params(params);
  return invert_from_table(target, params.coupling, hopping_table(params),
                           params.dimension);
}

double eigenvalue_at_site(const std::array<long, 2>& site,
                          const MarylandParams& params) {
  check_params(params);
  const auto w = hopping_table(params);
  return invert_from_table(phase_of_site(site, params), params.coupling, w,
                           params.dimension);
}

double eigenvalue_at_site(long site, const MarylandParams& params) {
  return eigenvalue_at_site(std::array<long, 2>{site, 0}, params);
}

DiophantineCalibration calibrate_diophantine(const MarylandParams& params,
                                             long window) {
  check_params(params);
  if (window < 4) throw InvalidParameter("window", "too small to calibrate");

  // Lower envelope of dist(alpha . x, Z) against |x|.
  std::vector<double> log_x, log_f;
  double best = 2.0;
  auto consider = [&](double dist, double norm) {
    if (dist < best && dist > 0.0) {
      best = dist;
      log_x.push_back(std::log(norm));
      log_f.push_back(std::log(dist));
    }
  };
  if (params.dimension == 1) {
    for (long x = 1; x <= window; ++x) {
      const double f = fractional(params.alpha[0] * static_cast<double>(x));
      consider(std::min(f, 1.0 - f), static_cast<double>(x));
    }
  } else {
    for (long x1 = -window; x1 <= window; ++x1)
      for (long x2 = 0; x2 <= window; ++x2) {
        if (x1 == 0 && x2 == 0) continue;
        if (x2 == 0 && x1 < 0) continue;  // (x, m) and (-x, -m) coincide
        const double f = fractional(params.alpha[0] * x1 + params.alpha[1] * x2);
        const double norm = std::hypot(static_cast<double>(x1),
                                       static_cast<double>(x2));
        consider(std::min(f, 1.0 - f), norm);
      }
  }

  DiophantineCalibration cal;
  if (log_x.size() < 2) {
    cal.beta = 1.0;
    cal.constant = best;
    return cal;
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < log_x.size(); ++i) {
    sx += log_x[i];
    sy += log_f[i];
    sxx += log_x[i] * log_x[i];
    sxy += log_x[i] * log_f[i];
  }
  const double n = static_cast<double>(log_x.size());
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  cal.beta = std::max(-slope, 1e-6);
  // C as the sharp constant over the window.
  double c = 1e300;
  for (std::size_t i = 0; i < log_x.size(); ++i)
    c = std::min(c, std::exp(log_f[i] + cal.beta * log_x[i]));
  cal.constant = c;
  return cal;
}

std::vector<ResonanceScan> resonance_distance(
    std::vector<double> nu_list, const MarylandParams& params, long window,
    double energy, const DiophantineCalibration& dio) {
  check_params(params);
  if (params.dimension != 1)
    throw ConfigError("resonance_distance: implemented for d = 1");
  const auto w = hopping_table(params);
  const double rho_e = dos_from_table(energy, params.coupling, w);
  const double nu0 = dio.constant / rho_e;

  struct SiteLevel {
    double e;
    long t;
  };
  std::vector<SiteLevel> levels;
  levels.reserve(static_cast<std::size_t>(2 * window + 1));
  for (long t = -window; t <= window; ++t) {
    const double target = phase_of_site({t, 0}, params);
    if (target <= 0.0 || target >= 1.0) continue;
    const double e =
        invert_from_table(target, params.coupling, w, params.dimension);
    if (std::abs(e - energy) <= 1.0) levels.push_back({e, t});
  }
  std::sort(levels.begin(), levels.end(),
            [](const SiteLevel& a, const SiteLevel& b) { return a.e < b.e; });

  std::vector<ResonanceScan> out;
  for (double nu : nu_list) {
    ResonanceScan scan;
    scan.nu = nu;
    scan.r1_formula = std::pow(nu0 / nu, 1.0 / dio.beta);
    long best = 0;
    for (std::size_t i = 0; i < levels.size(); ++i) {
      for (std::size_t j = i + 1; j < levels.size(); ++j) {
        if (levels[j].e - levels[i].e > nu) break;
        const long dist = std::abs(levels[j].t - levels[i].t);
        if (best == 0 || dist < best) best = dist;
      }
      if (best == 1) break;
    }
    scan.conclusive = best > 0;
    scan.r1_empirical = static_cast<double>(best);
    out.push_back(scan);
  }
  return out;
}

double sigma_order_estimate(double nu, const MarylandParams& params,
                            const DiophantineCalibration& dio, double energy,
                            double localization_radius) {
  check_params(params);
  if (!(nu > 0.0)) throw InvalidParameter("nu", "must be positive");
  if (!(localization_radius > 0.0))
    throw InvalidParameter("localization_radius", "must be positive");
  const double rho_e = dos(energy, params);
  const double nu0 = dio.constant / rho_e;
  const double nu1 =
      std::pow(2.0, dio.beta) * nu0 / std::pow(localization_radius, dio.beta);
  return std::exp(-std::pow(nu1 / nu, 1.0 / dio.beta));
}

}  // namespace mottlab::maryland
