#include "mottlab/correlators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mottlab/errors.hpp"
#include "mottlab/parallel.hpp"
#include "mottlab/quad.hpp"

namespace mottlab::correlators {

namespace {

constexpr double kPi = std::numbers::pi;

/// phi^2 as a radial density with unit mass and decay rate 2/r_l.
double squared_state(int d, double rl, double t) {
  double c2 = 0.0;  // c_d^2
  switch (d) {
    case 1:
      c2 = 1.0;
      break;
    case 2:
      c2 = 2.0 / kPi;
      break;
    case 3:
      c2 = 1.0 / kPi;
      break;
    default:
      throw InvalidParameter("dimension", "supported dimensions are 1, 2, 3");
  }
  return c2 / std::pow(rl, d) * std::exp(-2.0 * t / rl);
}

}  // namespace

KernelTable KernelTable::build(int dimension, double rl, double extent_rl,
                               double rel_tol) {
  KernelTable k;
  k.dimension_ = dimension;
  k.rl_ = rl;
  k.extent_ = extent_rl * rl;
  if (dimension == 1) return k;  // closed form, no table

  auto q = [&](double t) { return squared_state(dimension, rl, t); };
  const double lambda = 2.0 / rl;

  // Angular factor of the convolution at center distance x, ring radius s.
  const auto& ang = quad::gauss_legendre_rule(64);
  auto shell = [&](double x, double s) {
    if (x < 1e-9 * rl) return (dimension == 2 ? 2.0 * kPi : 4.0 * kPi) * q(s);
    if (dimension == 2) {
      double sum = 0.0;
      for (std::size_t i = 0; i < ang.nodes.size(); ++i) {
        const double theta = 0.5 * kPi * (1.0 + ang.nodes[i]);
        const double dist =
            std::sqrt(x * x + s * s - 2.0 * x * s * std::cos(theta));
        sum += ang.weights[i] * q(dist);
      }
      return 2.0 * (0.5 * kPi) * sum;  // 2 int_0^pi
    }
    // d = 3: (2 pi / (x s)) int_{|x-s|}^{x+s} q(t) t dt, closed for q ~ e^-lt.
    auto primitive = [&](double t) {
      return -std::exp(-lambda * t) * (t / lambda + 1.0 / (lambda * lambda));
    };
    const double c3 = q(0.0);
    const double inner =
        c3 * (primitive(x + s) - primitive(std::abs(x - s)));
    return 2.0 * kPi / (x * s) * inner;
  };

  const double step = rl / 32.0;
  const auto n = static_cast<std::size_t>(std::ceil(k.extent_ / step)) + 2;
  std::vector<double> values(n, 0.0);
  parallel_for(n, 0, [&](std::size_t i) {
    const double x = step * static_cast<double>(i);
    const double s_max = x + 15.0 * rl;
    auto radial = [&](double s) {
      return q(s) * std::pow(s, dimension - 1) * shell(x, s);
    };
    values[i] = quad::adaptive(radial, 0.0, s_max, rel_tol,
                               rel_tol * q(0.0) * 1e-4)
                    .value;
  });
  k.table_ = UniformSpline(std::move(values), step);
  return k;
}

double KernelTable::operator()(double r) const {
  r = std::abs(r);
  if (dimension_ == 1) {
    // Closed-form autocorrelation of the two-sided exponential density.
    const double lam = 2.0 / rl_;
    return 0.25 * lam * std::exp(-lam * r) * (1.0 + lam * r);
  }
  return table_(r);
}

namespace {

struct RadialGeometry {
  double resonance = 0.0;  // r(nu)
  double u_split = 0.0;    // u with s = r(nu) + 6 r_l
  double s_split = 0.0;
};

/// Angular average of K(|x - s w|) over directions w.
double angular_average(const KernelTable& kernel, int d, double x, double s,
                       const quad::GaussRule& ang) {
  if (x < 1e-12) return kernel(s);
  if (s < 1e-12) return kernel(x);
  switch (d) {
    case 1:
      return 0.5 * (kernel(std::abs(x - s)) + kernel(x + s));
    case 2: {
      double sum = 0.0;
      for (std::size_t i = 0; i < ang.nodes.size(); ++i) {
        const double theta = 0.5 * kPi * (1.0 + ang.nodes[i]);
        const double dist =
            std::sqrt(x * x + s * s - 2.0 * x * s * std::cos(theta));
        sum += ang.weights[i] * kernel(dist);
      }
      return 0.5 * sum;  // (1/pi) int_0^pi
    }
    case 3: {
      const double lo = std::abs(x - s);
      const double hi = x + s;
      double sum = 0.0;
      for (std::size_t i = 0; i < ang.nodes.size(); ++i) {
        const double t = 0.5 * (lo + hi) + 0.5 * (hi - lo) * ang.nodes[i];
        sum += ang.weights[i] * kernel(t) * t;
      }
      return 0.5 * (hi - lo) * sum / (2.0 * x * s);
    }
    default:
      throw InvalidParameter("dimension", "supported dimensions are 1, 2, 3");
  }
}

/// Radial integral of  weight(s) s^{d-1} f(s)  over s >= r(nu), where
/// weight is I^2/sqrt(nu^2-4I^2) (mode 0, the C1 weight) or
/// nu/sqrt(nu^2-4I^2) (mode 1, the C2 weight). Near the resonance radius the
/// cosine substitution removes the inverse-square-root edge; beyond
/// r + 6 r_l the weight is smooth in s and a plain adaptive pass picks up
/// the kernel bump around s = x.
double radial_integral(const std::function<double(double)>& f, int mode,
                       double nu, double rl, const RadialGeometry& geom,
                       int d, double s_max, double rel_tol, double abs_floor) {
  const double r = geom.resonance;

  auto near = [&](double u) {
    const double s = r + rl * std::log(1.0 / std::cos(u));
    const double jac = std::pow(s, d - 1);
    if (mode == 0) return 0.25 * nu * rl * std::cos(u) * jac * f(s);
    return rl / std::cos(u) * jac * f(s);
  };
  double total =
      quad::adaptive(near, 0.0, geom.u_split, rel_tol, abs_floor).value;

  if (s_max > geom.s_split) {
    auto far = [&](double s) {
      const double e = std::exp(-2.0 * (s - r) / rl);
      const double root = std::sqrt(1.0 - e);
      const double weight = (mode == 0) ? 0.25 * nu * e / root : 1.0 / root;
      return weight * std::pow(s, d - 1) * f(s);
    };
    total +=
        quad::adaptive(far, geom.s_split, s_max, rel_tol, abs_floor).value;
  }
  return total;
}

struct CurveEngine {
  const KernelTable* kernel;
  model::RegimeParams regime;
  CurveOptions opts;
  RadialGeometry geom;
  const quad::GaussRule* ang;

  CurveEngine(const model::RegimeParams& r, const KernelTable& k,
              const CurveOptions& o)
      : kernel(&k), regime(r), opts(o) {
    geom.resonance = response::resonance_radius(r.frequency, r);
    geom.s_split = geom.resonance + 6.0 * r.localization_radius;
    geom.u_split = std::acos(std::exp(-6.0));
    ang = &quad::gauss_legendre_rule(opts.angular_order);
  }

  [[nodiscard]] double c1(double x) const {
    const double nu = regime.frequency;
    const double rl = regime.localization_radius;
    const double rho = regime.dos_value;
    const double k_here = (*kernel)(x);
    auto bracket = [&](double s) {
      return k_here - angular_average(*kernel, regime.dimension, x, s, *ang);
    };
    const double s_max =
        std::max(geom.s_split + 20.0 * rl, x + 15.0 * rl);
    const double floor = opts.rel_tol * (*kernel)(0.0) *
                         std::pow(geom.resonance + rl, regime.dimension - 1) *
                         1e-3;
    const double integral =
        radial_integral(bracket, 0, nu, rl, geom, regime.dimension, s_max,
                        opts.rel_tol, floor);
    return 2.0 * rho * rho / nu *
           response::sphere_area(regime.dimension) * integral;
  }

  [[nodiscard]] double c2_extra(double x) const {
    const double nu = regime.frequency;
    const double rl = regime.localization_radius;
    const double rho = regime.dos_value;
    auto avg = [&](double s) {
      return angular_average(*kernel, regime.dimension, x, s, *ang);
    };
    const double s_max =
        std::max(geom.s_split + 20.0 * rl, x + 15.0 * rl);
    const double floor = opts.rel_tol * (*kernel)(0.0) *
                         std::pow(geom.resonance + rl, regime.dimension - 1) *
                         1e-3;
    const double integral =
        radial_integral(avg, 1, nu, rl, geom, regime.dimension, s_max,
                        opts.rel_tol, floor);
    return rho * rho * response::sphere_area(regime.dimension) * integral;
  }
};

}  // namespace

std::vector<double> c1_two_well(std::span<const double> radii,
                                const model::RegimeParams& regime,
                                const KernelTable& kernel,
                                const CurveOptions& opts) {
  CurveEngine engine(regime, kernel, opts);
  std::vector<double> out(radii.size(), 0.0);
  parallel_for(radii.size(), 0,
               [&](std::size_t i) { out[i] = engine.c1(radii[i]); });
  return out;
}

std::vector<double> c2_two_well(std::span<const double> radii,
                                std::span<const double> c1_values,
                                const model::RegimeParams& regime,
                                const KernelTable& kernel,
                                const CurveOptions& opts) {
  if (radii.size() != c1_values.size())
    throw ConfigError("c2_two_well: radii and C1 sizes differ");
  CurveEngine engine(regime, kernel, opts);
  std::vector<double> out(radii.size(), 0.0);
  parallel_for(radii.size(), 0, [&](std::size_t i) {
    out[i] = c1_values[i] + engine.c2_extra(radii[i]);
  });
  return out;
}

CorrelatorCurve correlator_curves(const model::RegimeParams& regime,
                                  const KernelTable& kernel,
                                  const CurveOptions& opts) {
  CorrelatorCurve curve;
  curve.nu = regime.frequency;
  curve.rl = regime.localization_radius;
  curve.rho = regime.dos_value;
  curve.dimension = regime.dimension;
  curve.resonance_radius = response::resonance_radius(regime.frequency, regime);

  const double extent =
      curve.resonance_radius + opts.extent_extra_rl * curve.rl;
  const double step = opts.grid_step_rl * curve.rl;
  const auto n = static_cast<std::size_t>(std::ceil(extent / step)) + 1;
  curve.x.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    curve.x[i] = step * static_cast<double>(i);

  curve.c1 = c1_two_well(curve.x, regime, kernel, opts);
  curve.c2 = c2_two_well(curve.x, curve.c1, regime, kernel, opts);
  return curve;
}

SumRuleReport sum_rules(const CorrelatorCurve& curve,
                        const model::RegimeParams& regime) {
  const double needed =
      curve.resonance_radius + 15.0 * curve.rl - 1e-9;
  if (curve.x.empty() || curve.x.back() < needed)
    throw ConfigError("sum_rules: grid must extend to r(nu) + 15 r_l");
  const double step = curve.x[1] - curve.x[0];
  const double sd = response::sphere_area(curve.dimension);

  std::vector<double> plain(curve.x.size()), absval(curve.x.size()),
      moment(curve.x.size());
  for (std::size_t i = 0; i < curve.x.size(); ++i) {
    const double jac = std::pow(curve.x[i], curve.dimension - 1);
    plain[i] = jac * curve.c1[i];
    absval[i] = jac * std::abs(curve.c1[i]);
    moment[i] = jac * curve.x[i] * curve.x[i] * curve.c1[i];
  }

  SumRuleReport rep;
  rep.c1_integral = sd * quad::simpson_uniform(plain, step);
  rep.c1_abs_integral = sd * quad::simpson_uniform(absval, step);
  rep.zero_sum_residual =
      std::abs(rep.c1_integral) / std::max(rep.c1_abs_integral, 1e-300);
  rep.tail_deviation =
      curve.c2.back() / (curve.rho * curve.rho) - 1.0;
  rep.moment_sigma = -0.5 * curve.nu * curve.nu * sd *
                     quad::simpson_uniform(moment, step);
  rep.sigma_integral =
      response::sigma_two_well(curve.nu, regime).sigma_integral;
  rep.moment_rel_mismatch =
      std::abs(rep.moment_sigma - rep.sigma_integral) /
      std::abs(rep.sigma_integral);
  return rep;
}

PeakReport peak_diagnostics(const CorrelatorCurve& curve) {
  PeakReport rep;
  rep.resonance_radius = curve.resonance_radius;
  rep.origin_height = curve.c1.front();

  const auto min_it = std::min_element(curve.c1.begin(), curve.c1.end());
  rep.dip_height = *min_it;
  rep.dip_location =
      curve.x[static_cast<std::size_t>(min_it - curve.c1.begin())];

  // Decay-rate fit of log C1 on [5, 8] r_l, inside the pure-kernel region.
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < curve.x.size(); ++i) {
    const double x = curve.x[i];
    if (x < 5.0 * curve.rl || x > 8.0 * curve.rl) continue;
    if (curve.c1[i] <= 0.0) continue;
    xs.push_back(x);
    ys.push_back(std::log(curve.c1[i]));
  }
  if (xs.size() >= 2) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      sx += xs[i];
      sy += ys[i];
      sxx += xs[i] * xs[i];
      sxy += xs[i] * ys[i];
    }
    const double n = static_cast<double>(xs.size());
    rep.decay_rate = -(n * sxy - sx * sy) / (n * sxx - sx * sx);
  }
  return rep;
}

PeakScaling peak_scaling(const CorrelatorCurve& slow,
                         const CorrelatorCurve& fast,
                         const model::RegimeParams& regime) {
  PeakScaling s;
  const PeakReport a = peak_diagnostics(slow);
  const PeakReport b = peak_diagnostics(fast);
  s.origin_ratio = a.origin_height / b.origin_height;
  s.dip_ratio = a.dip_height / b.dip_height;
  const double twice_i0 = 2.0 * regime.overlap_amplitude;
  s.predicted_log_ratio =
      std::log(twice_i0 / slow.nu) / std::log(twice_i0 / fast.nu);
  return s;
}

}  // namespace mottlab::correlators
