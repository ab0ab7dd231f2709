#include "mottlab/delta1d.hpp"

#include <algorithm>
#include <cmath>

#include "mottlab/errors.hpp"
#include "mottlab/rootfind.hpp"
#include "mottlab/twowell.hpp"

namespace mottlab::delta1d {

namespace {

void check_pair(const DeltaPair& pair) {
  if (!(pair.g1 > 0.0) || !(pair.g2 > 0.0))
    throw InvalidParameter("g1,g2", "well strengths must be positive");
  if (!(pair.separation > 0.0))
    throw InvalidParameter("separation", "must be positive");
}

double residual_k(const DeltaPair& pair, double k) {
  const double k1 = std::sqrt(pair.g1);
  const double k2 = std::sqrt(pair.g2);
  return (k - k1) * (k - k2) -
         k1 * k2 * std::exp(-2.0 * k * pair.separation);
}

}  // namespace

double level_residual(const DeltaPair& pair, double energy) {
  return residual_k(pair, std::sqrt(std::abs(energy)));
}

std::vector<double> exact_levels(const DeltaPair& pair, double tol) {
  check_pair(pair);
  if (!(tol > 0.0)) throw InvalidParameter("tol", "must be positive");
  const double k_hi = std::sqrt(pair.g1) + std::sqrt(pair.g2) + 1.0;
  const int n_scan = 10000;
  // k = 0 solves the equation identically (continuum edge); start just above.
  const double k_lo = k_hi * 1e-9;

  std::vector<double> roots;
  double prev_k = k_lo;
  double prev_f = residual_k(pair, prev_k);
  for (int i = 1; i <= n_scan; ++i) {
    const double k = k_lo + (k_hi - k_lo) * i / n_scan;
    const double f = residual_k(pair, k);
    if (prev_f == 0.0) {
      roots.push_back(prev_k);
    } else if (prev_f * f < 0.0) {
      const double root = rootfind::bisect(
          [&](double kk) { return residual_k(pair, kk); }, prev_k, k, 1e-15,
          tol);
      roots.push_back(root);
    }
    prev_k = k;
    prev_f = f;
  }
  if (roots.empty())
    throw NumericFailure(
        "exact_levels: no sign change over the scanned k interval",
        std::abs(prev_f));

  std::vector<double> energies;
  for (double k : roots) {
    if (std::abs(residual_k(pair, k)) > tol)
      throw NumericFailure("exact_levels: root residual above tolerance",
                           std::abs(residual_k(pair, k)));
    energies.push_back(-k * k);
  }
  std::sort(energies.begin(), energies.end());
  return energies;
}

double BoundState::operator()(double x) const {
  return coeff_left * std::exp(-decay * std::abs(x)) +
         coeff_right * std::exp(-decay * std::abs(x - separation));
}

BoundState exact_state(const DeltaPair& pair, double energy, double tol) {
  check_pair(pair);
  if (std::abs(level_residual(pair, energy)) > tol)
    throw InvalidParameter("energy", "not a bound-state level of this pair");
  const double k = std::sqrt(std::abs(energy));
  const double k1 = std::sqrt(pair.g1);
  const double k2 = std::sqrt(pair.g2);
  const double y = pair.separation;
  const double damp = std::exp(-k * y);

  // Matching at each delta gives (k - k_i) c_i = k_i e^{-k y} c_j; use the
  // better-conditioned relation.
  double a, b;
  if (std::abs(k - k1) <= std::abs(k - k2)) {
    a = 1.0;
    b = k2 * damp * a / (k - k2);
  } else {
    b = 1.0;
    a = k1 * damp * b / (k - k1);
  }
  // Closed-form norm of a two-exponential mixture.
  const double cross = damp * (y + 1.0 / k);
  const double norm2 = (a * a + b * b) / k + 2.0 * a * b * cross;
  const double scale = 1.0 / std::sqrt(norm2);

  BoundState s;
  s.energy = energy;
  s.decay = k;
  s.coeff_left = a * scale;
  s.coeff_right = b * scale;
  s.separation = y;
  return s;
}

ProjectionErrorReport projection_error_report(
    double g1, double g2, const std::vector<double>& separations) {
  ProjectionErrorReport report;
  const double g_mean = 0.5 * (g1 + g2);
  std::vector<double> log_y_err;
  std::vector<double> ys;

  for (double y : separations) {
    DeltaPair pair{g1, g2, y};
    const auto exact = exact_levels(pair);
    if (exact.size() < 2) continue;

    twowell::PairConfig cfg;
    cfg.g1 = std::max(g1, g2);
    cfg.g2 = std::min(g1, g2);
    cfg.separation = y;
    cfg.overlap = twowell::overlap_integral_delta_exact(y, g_mean);
    const auto proj = twowell::pair_levels(cfg);

    ProjectionErrorRow row;
    row.separation = y;
    row.exact_lower = exact.front();
    row.exact_upper = exact.back();
    row.proj_lower = proj.level_lower;
    row.proj_upper = proj.level_upper;
    row.error_lower = std::abs(row.proj_lower - row.exact_lower);
    row.error_upper = std::abs(row.proj_upper - row.exact_upper);
    const double split_exact = row.exact_upper - row.exact_lower;
    row.splitting_rel_error =
        std::abs((proj.level_upper - proj.level_lower) - split_exact) /
        split_exact;
    report.rows.push_back(row);

    const double err = 0.5 * (row.error_lower + row.error_upper);
    if (err > 0.0) {
      ys.push_back(y);
      log_y_err.push_back(std::log(err));
    }
  }

  // Least-squares slope of log(error) vs separation.
  if (ys.size() >= 2) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < ys.size(); ++i) {
      sx += ys[i];
      sy += log_y_err[i];
      sxx += ys[i] * ys[i];
      sxy += ys[i] * log_y_err[i];
    }
    const double n = static_cast<double>(ys.size());
    report.fitted_decay_exponent =
        (n * sxy - sx * sy) / (n * sxx - sx * sx);
  }
  return report;
}

}  // namespace mottlab::delta1d
