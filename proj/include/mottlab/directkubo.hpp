#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mottlab/expansion.hpp"
#include "mottlab/model.hpp"

namespace mottlab::directkubo {

struct ForcedWell {
  double center = 0.0;
  double amplitude = 1.0;
};

/// Box ensemble: Poisson well centers of density mu on [-L/2, L/2] with
/// amplitudes drawn from the profile, plus optional forced wells. Dirichlet
/// boundary, second-order finite differences.
struct BoxParams {
  double length = 400.0;
  double spacing = 0.05;
  double density = 0.0;  // mu; 0 keeps only forced wells
  expansion::DensityProfile profile;
  std::vector<ForcedWell> forced;
};

struct BoxRealization {
  double length = 0.0;
  double spacing = 0.0;
  std::vector<double> centers;
  std::vector<double> amplitudes;
  std::vector<double> potential;  // V on interior grid points
  std::uint64_t seed = 0;

  [[nodiscard]] std::size_t grid_points() const { return potential.size(); }
  [[nodiscard]] double grid_x(std::size_t i) const {
    return -0.5 * length + spacing * static_cast<double>(i + 1);
  }
};

/// Deterministic in seed; throws ConfigError when h^2 max(g) >= 0.01.
BoxRealization sample_realization(const BoxParams& params, std::uint64_t seed);

/// Finite-difference Hamiltonian of a realization (diag, off-diagonal).
void build_hamiltonian(const BoxRealization& box, std::vector<double>& diag,
                       std::vector<double>& off);

/// Negative spectrum of one realization.
std::vector<double> negative_spectrum(const BoxRealization& box);

struct DosHistogram {
  std::vector<double> edges;     // size bins+1
  std::vector<double> density;   // ensemble mean, per volume per energy
  std::vector<double> stderr_;   // realization-to-realization error
  std::vector<double> poisson;   // sqrt(total counts) error bars
  int realizations = 0;
};

DosHistogram dos_histogram(const BoxParams& params, int realizations,
                           std::uint64_t master_seed,
                           std::span<const double> edges, int threads = 0);

struct KuboEstimate {
  std::vector<double> nu;
  std::vector<double> sigma;
  std::vector<double> stderr_;
  double eta_ratio = 0.0;  // 0 for the pair-resolved estimator
  int realizations = 0;
};

/// Broadened Kubo sum sigma(nu) = nu^2 |L|^-1 sum delta_eta(E_F+nu-E_m)
/// delta_eta(E_F-E_n) |X_mn|^2 with Gaussian delta_eta, eta = eta_ratio nu,
/// averaged over seeded realizations. Requires eta_ratio <= 1/5.
KuboEstimate kubo_sigma(const BoxParams& params, double fermi_energy,
                        std::span<const double> nu_list, double eta_ratio,
                        int realizations, std::uint64_t master_seed,
                        int threads = 0);

struct PairMcParams {
  double box_length = 400.0;
  double spacing = 0.05;
  double fermi_energy = -1.0;
  expansion::DensityProfile profile;
  int samples = 200;
  std::uint64_t seed = 1;
  int threads = 0;
};

/// Monte Carlo of the pair sector of the Kubo sum: separations are
/// importance-sampled, the two amplitudes are solved so that the exact box
/// pair levels sit at E_F and E_F + nu (energy conservation integrated out
/// analytically, Hellmann-Feynman Newton), and the dipole comes from the box
/// eigenvectors. Estimates the same two-well conductivity as the density
/// expansion without the projection approximation.
KuboEstimate pair_sigma_mc(const PairMcParams& params,
                           std::span<const double> nu_list);

struct MottFit {
  double exponent = 0.0;        // p in sigma = A nu^2 log^p(2 I0 / nu)
  double ci_half_width = 0.0;   // 95% half width
  double log_amplitude = 0.0;
  double condition_number = 0.0;
};

/// Weighted least squares of log(sigma/nu^2) against log log(2 I0 / nu).
MottFit mott_scaling_fit(const KuboEstimate& estimate, double twice_i0);

}  // namespace mottlab::directkubo
