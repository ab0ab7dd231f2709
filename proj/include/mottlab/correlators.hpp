#pragma once

#include <span>
#include <vector>

#include "mottlab/model.hpp"
#include "mottlab/response.hpp"
#include "mottlab/spline.hpp"

namespace mottlab::correlators {

/// Autocorrelation K(x) = int phi^2(a) phi^2(a+x) da of the squared ground
/// state, with decay length r_l. d = 1 and d = 3 evaluate closed forms;
/// d = 2 tabulates a radial quadrature behind a cubic spline.
class KernelTable {
 public:
  static KernelTable build(int dimension, double rl, double extent_rl = 30.0,
                           double rel_tol = 1e-8);

  [[nodiscard]] double operator()(double r) const;
  [[nodiscard]] int dimension() const { return dimension_; }
  [[nodiscard]] double rl() const { return rl_; }
  [[nodiscard]] double extent() const { return extent_; }

 private:
  int dimension_ = 1;
  double rl_ = 1.0;
  double extent_ = 30.0;
  UniformSpline table_;  // d = 2 only
};

struct CurveOptions {
  double grid_step_rl = 0.02;   // output grid step, in units of r_l
  double extent_extra_rl = 15.0;  // grid reaches r(nu) + this many r_l
  double rel_tol = 1e-9;
  int angular_order = 64;       // Gauss nodes for the d >= 2 angular average
};

struct CorrelatorCurve {
  std::vector<double> x;
  std::vector<double> c1;
  std::vector<double> c2;
  double nu = 0.0;
  double rl = 1.0;
  double rho = 1.0;
  int dimension = 1;
  double resonance_radius = 0.0;
};

/// C1 and C2 two-well correlators on a uniform radial grid.
CorrelatorCurve correlator_curves(const model::RegimeParams& regime,
                                  const KernelTable& kernel,
                                  const CurveOptions& opts = {},
                                  response::Preset preset =
                                      response::Preset::mott);

/// C1 alone at arbitrary radii (same integrals as correlator_curves).
std::vector<double> c1_two_well(std::span<const double> radii,
                                const model::RegimeParams& regime,
                                const KernelTable& kernel,
                                const CurveOptions& opts = {});

std::vector<double> c2_two_well(std::span<const double> radii,
                                std::span<const double> c1_values,
                                const model::RegimeParams& regime,
                                const KernelTable& kernel,
                                const CurveOptions& opts = {});

struct SumRuleReport {
  double c1_integral = 0.0;          // int C1 d^d x
  double c1_abs_integral = 0.0;      // int |C1| d^d x
  double zero_sum_residual = 0.0;    // |int C1| / int |C1|
  double tail_deviation = 0.0;       // C2(max x)/rho^2 - 1
  double moment_sigma = 0.0;         // -(nu^2/2) int |x|^2 C1 d^d x
  double sigma_integral = 0.0;       // response.sigma_two_well
  double moment_rel_mismatch = 0.0;
};

SumRuleReport sum_rules(const CorrelatorCurve& curve,
                        const model::RegimeParams& regime);

struct PeakReport {
  double origin_height = 0.0;
  double dip_location = 0.0;
  double dip_height = 0.0;         // most negative C1 value
  double decay_rate = 0.0;         // fitted rate of C1 beyond the origin peak
  double resonance_radius = 0.0;
};

PeakReport peak_diagnostics(const CorrelatorCurve& curve);

struct PeakScaling {
  double origin_ratio = 0.0;   // heights at nu_2 over nu_1 (nu_2 < nu_1)
  double dip_ratio = 0.0;
  double predicted_log_ratio = 0.0;  // log(2 I0/nu_2)/log(2 I0/nu_1)
};

PeakScaling peak_scaling(const CorrelatorCurve& slow,
                         const CorrelatorCurve& fast,
                         const model::RegimeParams& regime);

}  // namespace mottlab::correlators
