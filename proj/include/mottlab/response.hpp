#pragma once

#include <optional>

#include "mottlab/model.hpp"

namespace mottlab::response {

/// Overlap-amplitude presets. The white-noise preset carries the exact 1D
/// amplitude I_0 = 4|E_F| instead of the order-of-magnitude |E_F|.
enum class Preset { mott, white_noise };

/// Regime with the preset's overlap amplitude substituted in.
[[nodiscard]] model::RegimeParams apply_preset(const model::RegimeParams& r,
                                               Preset preset);

/// Resonance radius r(nu) = r_l log(2 I_0 / nu). Throws RegimeError once the
/// logarithm closes (nu >= 2 I_0).
[[nodiscard]] double resonance_radius(double nu,
                                      const model::RegimeParams& regime,
                                      Preset preset = Preset::mott);

struct SigmaResult {
  double nu = 0.0;
  double sigma_integral = 0.0;    // radial integral, cosine substitution
  double sigma_asymptotic = 0.0;  // closed-form leading asymptotics
  double ratio = 0.0;
  double quad_error = 0.0;        // estimated relative quadrature error
  int dimension = 1;
};

/// Two-well conductivity
///   sigma = nu^2 rho^2 S_d r_l / 4 *
///           int_0^{pi/2} (r(nu) + r_l log(1/cos u))^{d+1} cos u du,
/// the |y| >= r(nu) radial integral after e^{-(|y|-r)/r_l} = cos u.
[[nodiscard]] SigmaResult sigma_two_well(double nu,
                                         const model::RegimeParams& regime,
                                         Preset preset = Preset::mott,
                                         double rel_tol = 1e-9);

/// Leading asymptotics nu^2 rho^2 S_d r_l^{d+2} log^{d+1}(2 I_0/nu) / 4.
[[nodiscard]] double sigma_mott_asymptotic(double nu,
                                           const model::RegimeParams& regime,
                                           Preset preset = Preset::mott);

/// One-well channel: the energy-conservation constraints cannot be met when
/// every achievable level spacing g |eps_n - eps_m| dwarfs nu.
struct OneWellGapReport {
  bool vanishes = true;
  /// Smallest spacing g_n |eps_n - eps_m| over level pairs; unset for a
  /// single-level well (no pairs at all).
  std::optional<double> min_spacing;
  double frequency = 0.0;
};

[[nodiscard]] OneWellGapReport one_well_sigma_vanishes(
    const model::WellProfile& well, double nu, double fermi_energy,
    double ratio_threshold = 0.05);

[[nodiscard]] double sphere_area(int dimension);

}  // namespace mottlab::response
