#include "mottlab/directkubo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mottlab/errors.hpp"
#include "mottlab/parallel.hpp"
#include "mottlab/rng.hpp"
#include "mottlab/tridiag.hpp"

namespace mottlab::directkubo {

namespace {

double max_amplitude(const BoxParams& params) {
  double g_max = params.density > 0.0 ? params.profile.support_hi : 0.0;
  for (const auto& w : params.forced) g_max = std::max(g_max, w.amplitude);
  return g_max;
}

void add_well(std::vector<double>& v, double length, double spacing,
              double center, double amplitude) {
  // -2 g sech^2(sqrt(g)(x - xi)); negligible beyond 20/sqrt(g).
  const double root = std::sqrt(amplitude);
  const double reach = 20.0 / root;
  const auto n = v.size();
  const auto lo = static_cast<std::size_t>(std::max(
      0.0, std::floor((center - reach + 0.5 * length) / spacing) - 1.0));
  for (std::size_t i = lo; i < n; ++i) {
    const double x = -0.5 * length + spacing * static_cast<double>(i + 1);
    if (x > center + reach) break;
    const double s = 1.0 / std::cosh(root * (x - center));
    v[i] += -2.0 * amplitude * s * s;
  }
}

}  // namespace

BoxRealization sample_realization(const BoxParams& params,
                                  std::uint64_t seed) {
  const double g_max = max_amplitude(params);
  if (g_max > 0.0 && params.spacing * params.spacing * g_max >= 0.01)
    throw ConfigError(
        "sample_realization: grid too coarse, need h^2 max(g) < 0.01");
  if (!(params.length > 0.0) || !(params.spacing > 0.0))
    throw InvalidParameter("length,spacing", "must be positive");

  BoxRealization box;
  box.length = params.length;
  box.spacing = params.spacing;
  box.seed = seed;
  const auto n =
      static_cast<std::size_t>(std::round(params.length / params.spacing)) - 1;
  box.potential.assign(n, 0.0);

  Rng rng(seed);
  if (params.density > 0.0) {
    const auto count = rng.poisson(params.density * params.length);
    for (std::uint64_t j = 0; j < count; ++j) {
      box.centers.push_back(
          rng.uniform(-0.5 * params.length, 0.5 * params.length));
      box.amplitudes.push_back(params.profile.sample(rng));
    }
  }
  for (const auto& w : params.forced) {
    box.centers.push_back(w.center);
    box.amplitudes.push_back(w.amplitude);
  }
  for (std::size_t j = 0; j < box.centers.size(); ++j)
    add_well(box.potential, box.length, box.spacing, box.centers[j],
             box.amplitudes[j]);
  return box;
}

void build_hamiltonian(const BoxRealization& box, std::vector<double>& diag,
                       std::vector<double>& off) {
  const double inv_h2 = 1.0 / (box.spacing * box.spacing);
  const std::size_t n = box.potential.size();
  diag.resize(n);
  off.assign(n > 0 ? n - 1 : 0, -inv_h2);
  for (std::size_t i = 0; i < n; ++i)
    diag[i] = 2.0 * inv_h2 + box.potential[i];
}

std::vector<double> negative_spectrum(const BoxRealization& box) {
  std::vector<double> diag, off;
  build_hamiltonian(box, diag, off);
  return tridiag::eigenvalues_in_range(diag, off, -1e308, -1e-12);
}

DosHistogram dos_histogram(const BoxParams& params, int realizations,
                           std::uint64_t master_seed,
                           std::span<const double> edges, int threads) {
  if (edges.size() < 2) throw ConfigError("dos_histogram: need >= 2 edges");
  for (std::size_t i = 1; i < edges.size(); ++i)
    if (!(edges[i] > edges[i - 1]))
      throw ConfigError("dos_histogram: edges must increase");
  if (!(edges.back() <= 0.0))
    throw ConfigError("dos_histogram: bins must lie at negative energies");
  if (realizations < 1)
    throw InvalidParameter("realizations", "must be >= 1");

  const std::size_t bins = edges.size() - 1;
  std::vector<std::vector<double>> per_real(
      static_cast<std::size_t>(realizations));
  parallel_for(static_cast<std::size_t>(realizations), threads,
               [&](std::size_t r) {
                 const auto box = sample_realization(
                     params, Rng::splitmix64(master_seed + r));
                 const auto levels = negative_spectrum(box);
                 std::vector<double> counts(bins, 0.0);
                 for (double e : levels) {
                   if (e < edges.front() || e >= edges.back()) continue;
                   const auto b = static_cast<std::size_t>(
                       std::upper_bound(edges.begin(), edges.end(), e) -
                       edges.begin() - 1);
                   counts[std::min(b, bins - 1)] += 1.0;
                 }
                 per_real[r] = std::move(counts);
               });

  DosHistogram hist;
  hist.edges.assign(edges.begin(), edges.end());
  hist.realizations = realizations;
  hist.density.assign(bins, 0.0);
  hist.stderr_.assign(bins, 0.0);
  hist.poisson.assign(bins, 0.0);
  const double volume = params.length;
  for (std::size_t b = 0; b < bins; ++b) {
    const double width = edges[b + 1] - edges[b];
    double mean = 0.0, total = 0.0;
    for (const auto& c : per_real) {
      mean += c[b];
      total += c[b];
    }
    mean /= realizations;
    double var = 0.0;
    for (const auto& c : per_real) var += (c[b] - mean) * (c[b] - mean);
    var /= std::max(1, realizations - 1);
    const double norm = volume * width;
    hist.density[b] = mean / norm;
    hist.stderr_[b] = std::sqrt(var / realizations) / norm;
    hist.poisson[b] =
        std::sqrt(std::max(total, 1.0)) / (realizations * norm);
  }
  return hist;
}

namespace {

double gaussian_delta(double t, double eta) {
  const double z = t / eta;
  return std::exp(-0.5 * z * z) /
         (eta * std::sqrt(2.0 * std::numbers::pi));
}

}  // namespace

KuboEstimate kubo_sigma(const BoxParams& params, double fermi_energy,
                        std::span<const double> nu_list, double eta_ratio,
                        int realizations, std::uint64_t master_seed,
                        int threads) {
  if (!(eta_ratio > 0.0) || eta_ratio > 0.2 + 1e-12)
    throw InvalidParameter("eta_ratio",
                           "broadening contract requires eta <= nu/5");
  if (!(fermi_energy < 0.0))
    throw InvalidParameter("fermi_energy", "must be negative");
  if (nu_list.empty()) throw ConfigError("kubo_sigma: empty frequency grid");

  double nu_max = 0.0;
  for (double nu : nu_list) {
    if (!(nu > 0.0)) throw InvalidParameter("nu", "must be positive");
    nu_max = std::max(nu_max, nu);
  }
  const double margin = 8.0 * eta_ratio * nu_max;
  const double window_lo = fermi_energy - margin;
  const double window_hi = std::min(fermi_energy + nu_max + margin, -1e-12);

  std::vector<std::vector<double>> per_real(
      static_cast<std::size_t>(realizations));
  parallel_for(static_cast<std::size_t>(realizations), threads,
               [&](std::size_t r) {
    const auto box =
        sample_realization(params, Rng::splitmix64(master_seed + r));
    std::vector<double> diag, off;
    build_hamiltonian(box, diag, off);
    const auto sel =
        tridiag::eigenpairs_in_range(diag, off, window_lo, window_hi);

    std::vector<double> sigma(nu_list.size(), 0.0);
    const std::size_t m = sel.values.size();
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        if (a == b) continue;
        // a: state near E_F + nu, b: state near E_F.
        double x_ab = 0.0;
        const auto va = sel.vector(a);
        const auto vb = sel.vector(b);
        for (std::size_t i = 0; i < va.size(); ++i)
          x_ab += box.grid_x(i) * va[i] * vb[i];
        const double x2 = x_ab * x_ab;
        for (std::size_t k = 0; k < nu_list.size(); ++k) {
          const double nu = nu_list[k];
          const double eta = eta_ratio * nu;
          sigma[k] += nu * nu *
                      gaussian_delta(fermi_energy + nu - sel.values[a], eta) *
                      gaussian_delta(fermi_energy - sel.values[b], eta) * x2;
        }
      }
    }
    for (double& s : sigma) s /= box.length;
    per_real[r] = std::move(sigma);
  });

  KuboEstimate est;
  est.nu.assign(nu_list.begin(), nu_list.end());
  est.eta_ratio = eta_ratio;
  est.realizations = realizations;
  est.sigma.assign(nu_list.size(), 0.0);
  est.stderr_.assign(nu_list.size(), 0.0);
  for (std::size_t k = 0; k < nu_list.size(); ++k) {
    double mean = 0.0;
    for (const auto& s : per_real) mean += s[k];
    mean /= realizations;
    double var = 0.0;
    for (const auto& s : per_real) var += (s[k] - mean) * (s[k] - mean);
    var /= std::max(1, realizations - 1);
    est.sigma[k] = mean;
    est.stderr_[k] = std::sqrt(var / realizations);
  }
  return est;
}

namespace {

/// Two-well box at separation y, amplitudes g1, g2; lowest two eigenpairs.
struct PairBox {
  double length, spacing;
  std::vector<double> base_diag;  // kinetic part
  std::vector<double> off;

  explicit PairBox(double l, double h) : length(l), spacing(h) {
    const auto n = static_cast<std::size_t>(std::round(l / h)) - 1;
    base_diag.assign(n, 2.0 / (h * h));
    off.assign(n - 1, -1.0 / (h * h));
  }

  [[nodiscard]] double grid_x(std::size_t i) const {
    return -0.5 * length + spacing * static_cast<double>(i + 1);
  }

  [[nodiscard]] tridiag::EigenSelection solve(double y, double g1,
                                              double g2) const {
    std::vector<double> diag = base_diag;
    auto add = [&](double center, double g) {
      const double root = std::sqrt(g);
      for (std::size_t i = 0; i < diag.size(); ++i) {
        const double dx = grid_x(i) - center;
        if (std::abs(dx) > 20.0 / root) continue;
        const double s = 1.0 / std::cosh(root * dx);
        diag[i] += -2.0 * g * s * s;
      }
    };
    add(-0.5 * y, g1);
    add(0.5 * y, g2);
    return tridiag::lowest_eigenpairs(diag, off, 2);
  }

  /// dE_i/dg_j by Hellmann-Feynman on the discrete Hamiltonian.
  void jacobian(const tridiag::EigenSelection& sel, double y, double g1,
                double g2, double out[2][2]) const {
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) out[i][j] = 0.0;
    for (int j = 0; j < 2; ++j) {
      const double center = (j == 0) ? -0.5 * y : 0.5 * y;
      const double g = (j == 0) ? g1 : g2;
      const double root = std::sqrt(g);
      for (std::size_t i = 0; i < base_diag.size(); ++i) {
        const double dx = grid_x(i) - center;
        if (std::abs(dx) > 20.0 / root) continue;
        const double c = std::cosh(root * dx);
        const double s2 = 1.0 / (c * c);
        const double t = std::tanh(root * dx);
        // d/dg [-2 g sech^2(sqrt(g) dx)]
        const double dv = -2.0 * s2 + 2.0 * root * dx * s2 * t;
        const auto v0 = sel.vector(0);
        const auto v1 = sel.vector(1);
        out[0][j] += v0[i] * v0[i] * dv;
        out[1][j] += v1[i] * v1[i] * dv;
      }
    }
  }
};

}  // namespace

KuboEstimate pair_sigma_mc(const PairMcParams& params,
                           std::span<const double> nu_list) {
  if (!(params.fermi_energy < 0.0))
    throw InvalidParameter("fermi_energy", "must be negative");
  if (params.samples < 2)
    throw InvalidParameter("samples", "need >= 2 for error bars");
  const double g0 = -params.fermi_energy;
  if (params.spacing * params.spacing * (g0 + 1.0) >= 0.01)
    throw ConfigError("pair_sigma_mc: grid too coarse for the well depth");

  const PairBox box(params.box_length, params.spacing);
  const double rl = 1.0 / std::sqrt(g0);

  // Calibrate the box overlap decay I(y) ~ A e^{-B y} from two symmetric
  // splittings bracketing the working separations.
  double nu_lo = nu_list.front(), nu_hi = nu_list.front();
  for (double nu : nu_list) {
    nu_lo = std::min(nu_lo, nu);
    nu_hi = std::max(nu_hi, nu);
  }
  const double y_a = rl * std::log(4.0 * g0 / nu_hi);
  const double y_b = rl * std::log(4.0 * g0 / nu_lo) + 2.0 * rl;
  auto splitting = [&](double y) {
    const auto sel = box.solve(y, g0, g0);
    return sel.values[1] - sel.values[0];
  };
  const double s_a = splitting(y_a);
  const double s_b = splitting(y_b);
  const double decay_b = std::log(s_a / s_b) / (y_b - y_a);
  const double amp_a = 0.5 * s_a * std::exp(decay_b * y_a);

  KuboEstimate est;
  est.nu.assign(nu_list.begin(), nu_list.end());
  est.realizations = params.samples;
  est.sigma.assign(nu_list.size(), 0.0);
  est.stderr_.assign(nu_list.size(), 0.0);

  for (std::size_t k = 0; k < nu_list.size(); ++k) {
    const double nu = nu_list[k];
    if (!(nu > 0.0)) throw InvalidParameter("nu", "must be positive");
    const double y_star = std::log(2.0 * amp_a / nu) / decay_b;
    const double y0 = y_star - 0.5 * rl;

    std::vector<double> contrib(static_cast<std::size_t>(params.samples),
                                0.0);
    parallel_for(static_cast<std::size_t>(params.samples), params.threads,
                 [&](std::size_t i) {
      Rng rng = Rng::substream(params.seed, k * 1000003ULL + i);
      const double u = rng.uniform(0.0, 0.5 * std::numbers::pi);
      const double y = y0 + std::log(1.0 / std::cos(u)) / decay_b;
      const double jac_y =
          (0.5 * std::numbers::pi) * std::tan(u) / decay_b;

      // Newton for (g1, g2) placing the box levels at E_F and E_F + nu.
      double g1 = g0 - 0.5 * nu;
      double g2 = g1;
      {
        const double i_y = amp_a * std::exp(-decay_b * y);
        const double d2 = 0.25 * nu * nu - i_y * i_y;
        if (d2 > 0.0) {
          g1 += std::sqrt(d2);
          g2 -= std::sqrt(d2);
        }
      }
      tridiag::EigenSelection sel;
      double jmat[2][2];
      bool ok = false;
      const double tol_f = 1e-10 * std::max(1.0, g0);
      for (int it = 0; it < 30; ++it) {
        sel = box.solve(y, g1, g2);
        if (sel.values.size() < 2) break;
        const double f1 = sel.values[0] - params.fermi_energy;
        const double f2 = sel.values[1] - params.fermi_energy - nu;
        if (std::abs(f1) < tol_f && std::abs(f2) < tol_f) {
          ok = true;
          break;
        }
        box.jacobian(sel, y, g1, g2, jmat);
        const double det = jmat[0][0] * jmat[1][1] - jmat[0][1] * jmat[1][0];
        if (std::abs(det) < 1e-14) break;
        const double dg1 = (jmat[1][1] * f1 - jmat[0][1] * f2) / det;
        const double dg2 = (-jmat[1][0] * f1 + jmat[0][0] * f2) / det;
        g1 -= dg1;
        g2 -= dg2;
        if (!(g1 > 0.2 * g0) || !(g2 > 0.2 * g0) || g1 > 5.0 * g0 ||
            g2 > 5.0 * g0)
          break;
      }
      if (!ok) return;  // no resonant pair at this separation

      box.jacobian(sel, y, g1, g2, jmat);
      const double det =
          std::abs(jmat[0][0] * jmat[1][1] - jmat[0][1] * jmat[1][0]);
      if (det < 1e-14) return;
      double dipole = 0.0;
      const auto v0 = sel.vector(0);
      const auto v1 = sel.vector(1);
      for (std::size_t ix = 0; ix < v0.size(); ++ix)
        dipole += box.grid_x(ix) * v0[ix] * v1[ix];
      const double weight =
          params.profile.density_at(g1) * params.profile.density_at(g2);
      // Factor 2: the (g1, g2) <-> (g2, g1) branch of the delta constraint.
      contrib[i] = 2.0 * nu * nu * dipole * dipole * weight / det * jac_y;
    });

    double mean = 0.0;
    for (double c : contrib) mean += c;
    mean /= params.samples;
    double var = 0.0;
    for (double c : contrib) var += (c - mean) * (c - mean);
    var /= std::max(1, params.samples - 1);
    est.sigma[k] = mean;
    est.stderr_[k] = std::sqrt(var / params.samples);
  }
  return est;
}

MottFit mott_scaling_fit(const KuboEstimate& estimate, double twice_i0) {
  const std::size_t n = estimate.nu.size();
  if (n < 4) throw ConfigError("mott_scaling_fit: need >= 4 frequencies");
  double nu_lo = estimate.nu.front(), nu_hi = estimate.nu.front();
  for (double nu : estimate.nu) {
    nu_lo = std::min(nu_lo, nu);
    nu_hi = std::max(nu_hi, nu);
  }
  if (std::log10(nu_hi / nu_lo) < 1.5 - 1e-9)
    throw ConfigError("mott_scaling_fit: span < 1.5 decades");

  double sxx = 0, sx = 0, sw = 0, sxy = 0, sy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(estimate.sigma[i] > 0.0))
      throw NumericFailure("mott_scaling_fit: non-positive sigma sample",
                           estimate.sigma[i]);
    const double rel = estimate.stderr_[i] / estimate.sigma[i];
    if (rel > 0.30)
      throw NumericFailure(
          "mott_scaling_fit: relative standard error above 30%", rel);
    const double x = std::log(std::log(twice_i0 / estimate.nu[i]));
    const double y =
        std::log(estimate.sigma[i] / (estimate.nu[i] * estimate.nu[i]));
    const double w = (rel > 1e-12) ? 1.0 / (rel * rel) : 1e24;
    sw += w;
    sx += w * x;
    sy += w * y;
    sxx += w * x * x;
    sxy += w * x * y;
  }
  const double det = sw * sxx - sx * sx;
  // Condition number of the 2x2 normal matrix.
  const double tr = sw + sxx;
  const double disc = std::sqrt(std::max(0.0, tr * tr - 4.0 * det));
  const double lam_max = 0.5 * (tr + disc);
  const double lam_min = 0.5 * (tr - disc);
  MottFit fit;
  fit.condition_number = lam_max / std::max(lam_min, 1e-300);
  if (!(det > 0.0) || fit.condition_number > 1e12)
    throw NumericFailure("mott_scaling_fit: ill-conditioned design matrix",
                         fit.condition_number);
  fit.exponent = (sw * sxy - sx * sy) / det;
  fit.log_amplitude = (sxx * sy - sx * sxy) / det;
  fit.ci_half_width = 1.96 * std::sqrt(sw / det);
  return fit;
}

}  // namespace mottlab::directkubo
