#include "mottlab/quad.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "mottlab/errors.hpp"

namespace mottlab::quad {

namespace {

GaussRule make_gauss_rule(int n) {
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  // Newton on Legendre P_n, Chebyshev-angle initial guesses.
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    double w = 2.0 / ((1.0 - x * x) * pp * pp);
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

}  // namespace

const GaussRule& gauss_legendre_rule(int order) {
  static std::map<int, GaussRule> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, make_gauss_rule(order)).first;
  return it->second;
}

double gauss_legendre(const std::function<double(double)>& f, double a,
                      double b, int order) {
  const GaussRule& rule = gauss_legendre_rule(order);
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double sum = 0.0;
  for (int i = 0; i < order; ++i)
    sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return half * sum;
}

Result gauss_doubling(const std::function<double(double)>& f, double a,
                      double b, double rel_tol, int initial_order,
                      int max_order) {
  Result res;
  double prev = gauss_legendre(f, a, b, initial_order);
  res.evaluations = initial_order;
  for (int order = 2 * initial_order; order <= max_order; order *= 2) {
    double cur = gauss_legendre(f, a, b, order);
    res.evaluations += order;
    res.error = std::abs(cur - prev);
    res.value = cur;
    if (res.error <= rel_tol * std::max(std::abs(cur), 1e-300)) return res;
    prev = cur;
  }
  throw NumericFailure("gauss_doubling: no convergence to requested tolerance",
                       res.error);
}

Result tanh_sinh(const std::function<double(double)>& f, double a, double b,
                 double rel_tol, int max_level) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double t_max = 3.6;  // weights underflow beyond this in double
  const double half_pi = 0.5 * std::numbers::pi;

  auto eval = [&](double t, double& x, double& w) {
    const double u = half_pi * std::sinh(t);
    const double c = std::cosh(u);
    x = std::tanh(u);           // abscissa on (-1, 1)
    w = half_pi * std::cosh(t) / (c * c);
  };

  auto sample = [&](double t) {
    double x, w;
    eval(t, x, w);
    // Map to (a, b); evaluate away from exact endpoints.
    const double lo_off = half * (1.0 + x);   // distance from a
    const double hi_off = half * (1.0 - x);   // distance from b
    if (lo_off <= 0.0 || hi_off <= 0.0) return 0.0;
    const double v = f(mid + half * x);
    return std::isfinite(v) ? v * w : 0.0;
  };

  Result res;
  double h = 1.0;
  double sum = sample(0.0);
  res.evaluations = 1;
  {
    int n = static_cast<int>(t_max / h);
    for (int k = 1; k <= n; ++k) {
      sum += sample(k * h) + sample(-k * h);
      res.evaluations += 2;
    }
  }
  double prev = sum * h * half;
  for (int level = 1; level <= max_level; ++level) {
    h *= 0.5;
    int n = static_cast<int>(t_max / h);
    for (int k = 1; k <= n; k += 2) {  // new (odd) points only
      sum += sample(k * h) + sample(-k * h);
      res.evaluations += 2;
    }
    double cur = sum * h * half;
    res.error = std::abs(cur - prev);
    res.value = cur;
    if (level >= 3 &&
        res.error <= rel_tol * std::max(std::abs(cur), 1e-300))
      return res;
    prev = cur;
  }
  throw NumericFailure("tanh_sinh: no convergence to requested tolerance",
                       res.error);
}

namespace {

struct AdaptiveCtx {
  const std::function<double(double)>* f;
  double rel_tol;
  double abs_floor;
  int evaluations = 0;
};

double adaptive_segment(AdaptiveCtx& ctx, double a, double b, double coarse,
                        int depth, double& err_acc) {
  const double fine = gauss_legendre(*ctx.f, a, b, 31);
  ctx.evaluations += 31;
  const double err = std::abs(fine - coarse);
  if (err <= ctx.rel_tol * std::abs(fine) + ctx.abs_floor || depth <= 0) {
    err_acc += err;
    return fine;
  }
  const double mid = 0.5 * (a + b);
  const double left = gauss_legendre(*ctx.f, a, mid, 15);
  const double right = gauss_legendre(*ctx.f, mid, b, 15);
  ctx.evaluations += 30;
  return adaptive_segment(ctx, a, mid, left, depth - 1, err_acc) +
         adaptive_segment(ctx, mid, b, right, depth - 1, err_acc);
}

}  // namespace

Result adaptive(const std::function<double(double)>& f, double a, double b,
                double rel_tol, double abs_floor, int max_depth) {
  AdaptiveCtx ctx{&f, rel_tol, abs_floor};
  double err = 0.0;
  const double coarse = gauss_legendre(f, a, b, 15);
  ctx.evaluations = 15;
  Result res;
  res.value = adaptive_segment(ctx, a, b, coarse, max_depth, err);
  res.error = err;
  res.evaluations = ctx.evaluations;
  return res;
}

double simpson_uniform(std::span<const double> values, double step) {
  const std::size_t n = values.size();
  if (n < 2) return 0.0;
  std::size_t m = (n % 2 == 1) ? n : n - 1;  // largest odd prefix
  double sum = values[0] + values[m - 1];
  for (std::size_t i = 1; i + 1 < m; ++i)
    sum += values[i] * ((i % 2 == 1) ? 4.0 : 2.0);
  double result = sum * step / 3.0;
  if (m != n)  // trapezoid patch for the last interval
    result += 0.5 * step * (values[n - 2] + values[n - 1]);
  return result;
}

}  // namespace mottlab::quad
