#include "mottlab/response.hpp"

#include <cmath>
#include <numbers>

#include "mottlab/errors.hpp"
#include "mottlab/quad.hpp"

namespace mottlab::response {

double sphere_area(int dimension) {
  switch (dimension) {
    case 1:
      return 2.0;
    case 2:
      return 2.0 * std::numbers::pi;
    case 3:
      return 4.0 * std::numbers::pi;
    default:
      throw InvalidParameter("dimension", "supported dimensions are 1, 2, 3");
  }
}

model::RegimeParams apply_preset(const model::RegimeParams& r, Preset preset) {
  model::RegimeParams out = r;
  if (preset == Preset::white_noise)
    out.overlap_amplitude = 4.0 * std::abs(r.fermi_energy);
  return out;
}

double resonance_radius(double nu, const model::RegimeParams& regime,
                        Preset preset) {
  const model::RegimeParams r = apply_preset(regime, preset);
  if (!(nu > 0.0)) throw InvalidParameter("frequency", "must be positive");
  if (!(nu < 2.0 * r.overlap_amplitude))
    throw RegimeError(
        "resonance_radius: nu >= 2 I_0, no resonant separation exists");
  return r.localization_radius * std::log(2.0 * r.overlap_amplitude / nu);
}

SigmaResult sigma_two_well(double nu, const model::RegimeParams& regime,
                           Preset preset, double rel_tol) {
  const model::RegimeParams r = apply_preset(regime, preset);
  const double radius = resonance_radius(nu, r);  // validates the domain
  const double rl = r.localization_radius;
  const int d = r.dimension;

  auto integrand = [&](double u) {
    const double reach = radius + rl * std::log(1.0 / std::cos(u));
    return std::pow(reach, d + 1) * std::cos(u);
  };
  const auto q = quad::tanh_sinh(integrand, 0.0, 0.5 * std::numbers::pi,
                                 rel_tol);

  SigmaResult out;
  out.nu = nu;
  out.dimension = d;
  const double prefactor =
      nu * nu * r.dos_value * r.dos_value * sphere_area(d) * rl / 4.0;
  out.sigma_integral = prefactor * q.value;
  out.sigma_asymptotic = sigma_mott_asymptotic(nu, r);
  out.ratio = out.sigma_integral / out.sigma_asymptotic;
  out.quad_error = q.error / std::max(std::abs(q.value), 1e-300);
  return out;
}

double sigma_mott_asymptotic(double nu, const model::RegimeParams& regime,
                             Preset preset) {
  const model::RegimeParams r = apply_preset(regime, preset);
  if (!(nu > 0.0)) throw InvalidParameter("frequency", "must be positive");
  if (!(nu < 2.0 * r.overlap_amplitude))
    throw RegimeError("sigma_mott_asymptotic: nu >= 2 I_0");
  const double rl = r.localization_radius;
  const int d = r.dimension;
  const double log_factor = std::log(2.0 * r.overlap_amplitude / nu);
  return nu * nu * r.dos_value * r.dos_value * sphere_area(d) *
         std::pow(rl, d + 2) * std::pow(log_factor, d + 1) / 4.0;
}

OneWellGapReport one_well_sigma_vanishes(const model::WellProfile& well,
                                         double nu, double fermi_energy,
                                         double ratio_threshold) {
  if (!(nu > 0.0)) throw InvalidParameter("frequency", "must be positive");
  if (!(fermi_energy < 0.0))
    throw InvalidParameter("fermi_energy", "must be negative");

  OneWellGapReport report;
  report.frequency = nu;
  const auto& eps = well.negative_levels;
  // For each level pinned to E_F, the partner level sits a gap
  // g |eps_n - eps_m| away; a one-well contribution needs that gap ~ nu.
  for (std::size_t n = 0; n < eps.size(); ++n) {
    const double g = fermi_energy / eps[n];
    if (!(g > 0.0)) continue;
    for (std::size_t m = 0; m < eps.size(); ++m) {
      if (m == n) continue;
      const double spacing = g * std::abs(eps[n] - eps[m]);
      if (!report.min_spacing || spacing < *report.min_spacing)
        report.min_spacing = spacing;
    }
  }
  if (report.min_spacing)
    report.vanishes = nu <= ratio_threshold * (*report.min_spacing);
  else
    report.vanishes = true;  // single level: no pairs at any g
  return report;
}

}  // namespace mottlab::response
