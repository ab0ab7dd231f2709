#include "mottlab/model.hpp"

#include <cmath>
#include <numbers>

#include "mottlab/errors.hpp"

namespace mottlab::model {

double WellProfile::exponential_norm_constant(int dimension) {
  // c_d^2 int e^{-2r} dV = 1 over R^d.
  switch (dimension) {
    case 1:
      return 1.0;  // int e^{-2|x|} dx = 1
    case 2:
      return std::sqrt(2.0 / std::numbers::pi);
    case 3:
      return 1.0 / std::sqrt(std::numbers::pi);
    default:
      throw InvalidParameter("dimension", "supported dimensions are 1, 2, 3");
  }
}

double WellProfile::ground_state(double r) const {
  r = std::abs(r);
  switch (shape) {
    case WellShape::delta_1d:
      return std::exp(-r);
    case WellShape::poschl_teller_1d:
      // Ground state of -d^2/dx^2 - 2 sech^2 x at energy -1.
      return 1.0 / (std::sqrt(2.0) * std::cosh(r));
    case WellShape::exponential_ground_state:
      return exponential_norm_constant(dimension) * std::exp(-r);
  }
  return 0.0;
}

WellProfile WellProfile::poschl_teller() {
  return WellProfile{WellShape::poschl_teller_1d, 1, {-1.0}, 1.0};
}

WellProfile WellProfile::delta() {
  return WellProfile{WellShape::delta_1d, 1, {-1.0}, 0.0};
}

WellProfile WellProfile::exponential(int dimension) {
  (void)WellProfile::exponential_norm_constant(dimension);  // validates d
  return WellProfile{WellShape::exponential_ground_state, dimension, {-1.0},
                     1.0};
}

WellProfile WellProfile::with_levels(std::vector<double> levels) const {
  if (levels.empty() || levels.front() != -1.0)
    throw InvalidParameter("negative_levels",
                           "first level must be -1 (well normalization)");
  for (double e : levels)
    if (!(e < 0.0))
      throw InvalidParameter("negative_levels", "levels must be negative");
  WellProfile out = *this;
  out.negative_levels = std::move(levels);
  return out;
}

RegimeParams RegimeParams::defaults(int dimension, double fermi_energy,
                                    double frequency) {
  RegimeParams p;
  p.dimension = dimension;
  p.fermi_energy = fermi_energy;
  p.frequency = frequency;
  p.localization_radius = 1.0 / std::sqrt(std::abs(fermi_energy));
  p.overlap_amplitude = std::abs(fermi_energy);
  return p;
}

namespace {

void require_finite(double v, const char* field) {
  if (!std::isfinite(v)) throw InvalidParameter(field, "must be finite");
}

}  // namespace

ValidityReport validate_regime(const RegimeParams& params,
                               const RegimeTolerances& tol) {
  require_finite(params.fermi_energy, "fermi_energy");
  require_finite(params.frequency, "frequency");
  require_finite(params.well_density, "well_density");
  require_finite(params.well_radius, "well_radius");
  require_finite(params.localization_radius, "localization_radius");
  if (!(params.frequency > 0.0))
    throw InvalidParameter("frequency", "must be positive");
  if (!(params.fermi_energy < 0.0))
    throw InvalidParameter("fermi_energy", "must be negative");
  if (params.dimension < 1 || params.dimension > 3)
    throw InvalidParameter("dimension", "supported dimensions are 1, 2, 3");
  if (!(params.well_density > 0.0))
    throw InvalidParameter("well_density", "must be positive");

  ValidityReport report;
  const double spacing_inv =
      std::pow(params.well_density, 1.0 / params.dimension);

  auto add = [&](std::string name, double ratio) {
    report.checks.push_back(
        {std::move(name), ratio, tol.max_ratio, ratio <= tol.max_ratio});
  };
  // nu << |E_F|
  add("frequency_vs_fermi_energy",
      params.frequency / std::abs(params.fermi_energy));
  // a << mu_bar^{-1/d}
  add("well_radius_vs_spacing", params.well_radius * spacing_inv);
  // g^{-1/2} << mu_bar^{-1/d} with g of order |E_F|
  add("localization_radius_vs_spacing",
      spacing_inv / std::sqrt(std::abs(params.fermi_energy)));

  report.pass = true;
  for (const auto& c : report.checks) report.pass = report.pass && c.pass;
  return report;
}

}  // namespace mottlab::model
