#pragma once

#include <vector>

namespace mottlab::delta1d {

/// Two attractive delta wells -2 sqrt(g_k) delta(x - x_k) in 1D, wells at
/// x = 0 and x = y.
struct DeltaPair {
  double g1 = 1.0;
  double g2 = 1.0;
  double separation = 1.0;
};

/// All bound-state energies E < 0, ascending. Roots of
/// (k - sqrt(g1))(k - sqrt(g2)) = sqrt(g1 g2) e^{-2 k y}, k = sqrt(|E|),
/// located by a uniform scan plus bisection; each satisfies the equation to
/// residual < tol.
std::vector<double> exact_levels(const DeltaPair& pair, double tol = 1e-12);

/// Residual of the transcendental equation at k = sqrt(|E|).
double level_residual(const DeltaPair& pair, double energy);

/// Normalized bound state A e^{-k|x|} + B e^{-k|x-y|} for a level from
/// exact_levels.
struct BoundState {
  double energy = 0.0;
  double decay = 0.0;       // k = sqrt(|E|)
  double coeff_left = 0.0;  // A
  double coeff_right = 0.0; // B
  double separation = 0.0;

  [[nodiscard]] double operator()(double x) const;
};

BoundState exact_state(const DeltaPair& pair, double energy,
                       double tol = 1e-9);

/// Per-separation comparison of the exact levels with the 2x2 projection
/// using the delta-exact overlap 2 g e^{-sqrt(g) y}.
struct ProjectionErrorRow {
  double separation = 0.0;
  double exact_lower = 0.0, exact_upper = 0.0;
  double proj_lower = 0.0, proj_upper = 0.0;
  double error_lower = 0.0, error_upper = 0.0;
  double splitting_rel_error = 0.0;
};

struct ProjectionErrorReport {
  std::vector<ProjectionErrorRow> rows;
  /// Exponent of the fitted error decay e^{p y}; the projection is sound
  /// when p is close to -2 sqrt(g).
  double fitted_decay_exponent = 0.0;
};

ProjectionErrorReport projection_error_report(
    double g1, double g2, const std::vector<double>& separations);

}  // namespace mottlab::delta1d
