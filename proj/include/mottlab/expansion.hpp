#pragma once

#include <array>
#include <functional>
#include <span>
#include <vector>

#include "mottlab/model.hpp"
#include "mottlab/rng.hpp"

namespace mottlab::expansion {

/// A point of the effective potential: center plus amplitude mark.
struct MarkedPoint {
  std::array<double, 3> position{0.0, 0.0, 0.0};
  double amplitude = 1.0;
};

/// Translation-invariant, additively clustering functional of marked point
/// sets, the object the density expansion acts on.
struct ClusterFunctional {
  std::function<double(std::span<const MarkedPoint>)> evaluate;
};

/// Brute-force double-subset sum  sum_{Y<=X} sum_{Z<=Y} (-1)^{|Y\Z|} F(Z),
/// which reproduces F(X) identically; reference for expansion terms.
double inclusion_exclusion(const ClusterFunctional& f,
                           std::span<const MarkedPoint> points,
                           int max_size = 6);

/// Cluster (Ursell) term  sum_{Z<=X} (-1)^{|X\Z|} F(Z); vanishes beyond first
/// order for non-interacting wells.
double cluster_term(const ClusterFunctional& f,
                    std::span<const MarkedPoint> points, int max_size = 6);

/// Density of well amplitudes: mu(g) = mu p(g) with a normalized p.
/// support_lo/hi bracket where p is non-negligible; quadratures rely on them.
struct DensityProfile {
  double total_density = 1.0;
  std::function<double(double)> amplitude_density;  // p(g), g > 0
  std::function<double(Rng&)> sample;               // draw g ~ p
  double support_lo = 0.0;
  double support_hi = 0.0;

  [[nodiscard]] double density_at(double g) const {
    return g > 0.0 ? total_density * amplitude_density(g) : 0.0;
  }

  [[nodiscard]] DensityProfile rescaled(double new_total) const {
    DensityProfile out = *this;
    out.total_density = new_total;
    return out;
  }

  static DensityProfile gaussian(double total_density, double center,
                                 double sigma);
  static DensityProfile uniform(double total_density, double lo, double hi);
};

/// One-well DOS  rho^(1)(E) = sum_n mu(E/eps_n) / |eps_n|, E < 0.
double dos_one_well(double energy, const DensityProfile& profile,
                    const model::WellProfile& well);

struct TwoWellOptions {
  double energy_step_factor = 1e-3;   // centered-difference step, x |E|
  double overlap_tail_cut = 1e-14;    // truncate where I(y) < cut * |E|
  int radial_panels_per_rl = 4;       // composite Gauss panels per r_l
  int gauss_order = 16;
};

/// Integrated two-well counting correction N^(2)(E): pair levels from the
/// 2x2 projection minus the decoupled levels, integrated over separation and
/// both amplitudes.
double integrated_two_well_count(double energy, const DensityProfile& profile,
                                 const model::RegimeParams& regime,
                                 const TwoWellOptions& opts = {});

/// Two-well DOS correction rho^(2)(E) = d/dE N^(2)(E) by centered difference.
double dos_two_well_correction(double energy, const DensityProfile& profile,
                               const model::RegimeParams& regime,
                               const TwoWellOptions& opts = {});

struct DosCurve {
  std::vector<double> energy;
  std::vector<double> rho1;
  std::vector<double> rho2;
  double total_density = 0.0;
};

DosCurve dos_curve(std::span<const double> energies,
                   const DensityProfile& profile,
                   const model::WellProfile& well,
                   const model::RegimeParams& regime,
                   const TwoWellOptions& opts = {});

}  // namespace mottlab::expansion
