#pragma once

#include "mottlab/model.hpp"

namespace mottlab::twowell {

/// Model overlap integral I(y) = I_0 e^{-|y|/r_l}.
[[nodiscard]] double overlap_integral(double separation,
                                      const model::RegimeParams& regime);

/// Overlap that reproduces the exact 1D two-delta-well splitting
/// asymptotics, I(y) = 2 g e^{-sqrt(g) |y|}; used by the delta1d
/// cross-checks. g is the mean amplitude of the pair.
[[nodiscard]] double overlap_integral_delta_exact(double separation,
                                                  double mean_amplitude);

/// Literal ground-state overlap g (phi_1, phi_2) for exponential states,
/// g (1 + sqrt(g) |y|) e^{-sqrt(g) |y|}. Diagnostic only: it carries a
/// polynomial prefactor that the exact splitting does not have.
[[nodiscard]] double overlap_integral_delta_literal(double separation,
                                                    double mean_amplitude);

/// Two wells with amplitudes g1 >= g2 > 0 at separation |y| and a
/// precomputed overlap I(|y|).
struct PairConfig {
  double g1 = 1.0;
  double g2 = 1.0;
  double separation = 0.0;
  double overlap = 0.0;
};

struct PairSpectrum {
  double level_lower = 0.0;   // E_1^(2)
  double level_upper = 0.0;   // E_2^(2)
  double mixing_angle = 0.0;  // theta in [0, pi/4]
  double overlap = 0.0;
  double dipole = 0.0;        // |X_12^(2)|, leading term
};

/// 2x2 projection spectrum: E_k = -g -(-1)^{k-1} sqrt(delta^2 + I^2) with
/// g = (g1+g2)/2, delta = (g1-g2)/2, and tan(theta) = I/(delta + sqrt(..)).
[[nodiscard]] PairSpectrum pair_levels(const PairConfig& cfg);

/// Leading dipole matrix element |y| I / (2 sqrt(delta^2 + I^2)).
[[nodiscard]] double dipole_element(const PairConfig& cfg,
                                    const PairSpectrum& spectrum);

/// The two correction terms dropped from the dipole element, evaluated
/// numerically for the given well; both vanish or stay subleading for even
/// ground states.
struct DipoleCorrections {
  double leading = 0.0;
  double asymmetry_term = 0.0;  // (g1^-1/2 - g2^-1/2) ... int x phi^2
  double cross_term = 0.0;      // delta/sqrt(..) int x phi_1 phi_2
};

[[nodiscard]] DipoleCorrections dipole_corrections(
    const PairConfig& cfg, const model::WellProfile& well);

}  // namespace mottlab::twowell
