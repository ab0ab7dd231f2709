#pragma once

#include <array>
#include <vector>

#include "mottlab/model.hpp"

namespace mottlab::maryland {

/// Incommensurate tight-binding model V(x) = g tan(pi(alpha.x + omega)) with
/// hopping symbol w(k) = 2 sum_i cos(k_i); d = 1 or 2.
struct MarylandParams {
  int dimension = 1;
  double coupling = 1.0;            // g > 0
  std::array<double, 2> alpha{0.0, 0.0};
  double omega = 0.0;               // phase in [0, 1)
  int torus_nodes_1d = 2048;        // trapezoid nodes per torus direction
  int torus_nodes_2d = 256;
};

/// Golden-mean frequency (sqrt(5)-1)/2, the canonical 1D choice.
double golden_alpha();

/// rho(E): Cauchy profile of width g averaged over the hopping band.
double dos(double energy, const MarylandParams& params);

/// N(E) in (0, 1): torus average of the closed Cauchy CDF; strictly
/// increasing in E.
double integrated_dos(double energy, const MarylandParams& params);

/// Inverse of N by bisection to |N - target| < 1e-12.
double invert_integrated_dos(double target, const MarylandParams& params);

/// E_t(omega) solving N(E_t) = frac(alpha . t + omega); unique per site.
double eigenvalue_at_site(const std::array<long, 2>& site,
                          const MarylandParams& params);
double eigenvalue_at_site(long site, const MarylandParams& params);

/// Empirical Diophantine constants: fit of the lower envelope of
/// |alpha . x + m| against |x| over a lattice window.
struct DiophantineCalibration {
  double constant = 0.0;  // C
  double beta = 0.0;
};

DiophantineCalibration calibrate_diophantine(const MarylandParams& params,
                                             long window);

struct ResonanceScan {
  double nu = 0.0;
  double r1_formula = 0.0;    // (nu_0(E)/nu)^{1/beta}
  double r1_empirical = 0.0;  // min |t1-t2| with |E_t1 - E_t2| <= nu
  bool conclusive = true;
};

/// Scans sites t in [-window, window] (d = 1) around energy reference
/// `energy` and reports the minimal resonating distance for each frequency.
std::vector<ResonanceScan> resonance_distance(
    std::vector<double> nu_list, const MarylandParams& params, long window,
    double energy, const DiophantineCalibration& dio);

/// Stretched-exponential conductivity envelope exp(-(nu_1/nu)^{1/beta}).
double sigma_order_estimate(double nu, const MarylandParams& params,
                            const DiophantineCalibration& dio, double energy,
                            double localization_radius);

}  // namespace mottlab::maryland
