#pragma once

#include <cmath>
#include <string>
#include <vector>

namespace mottlab::model {

// Units throughout: hbar = 1, 2m = 1, e = 1. Energies and inverse squared
// lengths are interchangeable; the default localization radius obeys
// r_l^2 |E_F| = 1.

enum class WellShape { delta_1d, poschl_teller_1d, exponential_ground_state };

/// Dimensionless single well: negative levels with eps_1 = -1 and a
/// normalized ground state that decays like e^{-|x|}.
struct WellProfile {
  WellShape shape = WellShape::poschl_teller_1d;
  int dimension = 1;
  std::vector<double> negative_levels{-1.0};
  double well_radius = 1.0;

  /// Normalized ground state value at radius r >= 0.
  [[nodiscard]] double ground_state(double r) const;
  /// Normalization constant c_d of the exponential profile c_d e^{-r}.
  [[nodiscard]] static double exponential_norm_constant(int dimension);

  static WellProfile poschl_teller();
  static WellProfile delta();
  static WellProfile exponential(int dimension);
  /// Same shape with a custom negative spectrum (eps_1 = -1 still enforced).
  [[nodiscard]] WellProfile with_levels(std::vector<double> levels) const;
};

/// Physical regime of the strong-localization expansion.
struct RegimeParams {
  int dimension = 1;
  double fermi_energy = -1.0;       // E_F < 0
  double frequency = 1e-4;          // nu > 0
  double localization_radius = 1.0; // r_l, default |E_F|^{-1/2}
  double overlap_amplitude = 1.0;   // I_0, default |E_F|
  double dos_value = 1.0;           // rho(E_F)
  double well_density = 1e-3;       // mu_bar
  double well_radius = 0.1;         // a, in physical length units

  /// Regime with the default derived scales r_l = |E_F|^{-1/2}, I_0 = |E_F|.
  static RegimeParams defaults(int dimension, double fermi_energy,
                               double frequency);
};

struct RegimeTolerances {
  double max_ratio = 0.05;  // numeric stand-in for "<<"
};

struct InequalityCheck {
  std::string name;
  double ratio = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

struct ValidityReport {
  std::vector<InequalityCheck> checks;
  bool pass = false;
};

/// Evaluates the regime inequalities (frequency vs Fermi energy, well radius
/// vs spacing, localization radius vs spacing) as ratios against the
/// configured threshold. Throws InvalidParameter on ill-formed inputs.
ValidityReport validate_regime(const RegimeParams& params,
                               const RegimeTolerances& tol = {});

}  // namespace mottlab::model
