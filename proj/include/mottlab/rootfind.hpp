#pragma once

#include <cmath>
#include <functional>

#include "mottlab/errors.hpp"

namespace mottlab::rootfind {

/// Bisection on a bracketing interval [a, b] with f(a) f(b) <= 0.
/// Stops when the interval shrinks below x_tol or |f| below f_tol.
inline double bisect(const std::function<double(double)>& f, double a,
                     double b, double x_tol = 1e-14, double f_tol = 0.0,
                     int max_iter = 200) {
  double fa = f(a);
  double fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if (fa * fb > 0.0)
    throw NumericFailure("bisect: interval does not bracket a root",
                         std::min(std::abs(fa), std::abs(fb)));
  for (int i = 0; i < max_iter; ++i) {
    double m = 0.5 * (a + b);
    double fm = f(m);
    if (fm == 0.0 || (f_tol > 0.0 && std::abs(fm) < f_tol) ||
        0.5 * (b - a) < x_tol * (1.0 + std::abs(m)))
      return m;
    if (fa * fm < 0.0) {
      b = m;
      fb = fm;
    } else {
      a = m;
      fa = fm;
    }
  }
  return 0.5 * (a + b);
}

/// Secant iteration with a bisection fallback kept inside [a, b].
inline double secant_bracketed(const std::function<double(double)>& f,
                               double a, double b, double x_tol = 1e-14,
                               int max_iter = 100) {
  double fa = f(a), fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if (fa * fb > 0.0)
    throw NumericFailure("secant_bracketed: no bracket",
                         std::min(std::abs(fa), std::abs(fb)));
  for (int i = 0; i < max_iter; ++i) {
    double m = (std::abs(fb - fa) > 1e-300)
                   ? b - fb * (b - a) / (fb - fa)
                   : 0.5 * (a + b);
    if (!(m > a && m < b)) m = 0.5 * (a + b);
    double fm = f(m);
    if (fm == 0.0 || b - a < x_tol * (1.0 + std::abs(m))) return m;
    if (fa * fm < 0.0) {
      b = m;
      fb = fm;
    } else {
      a = m;
      fa = fm;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace mottlab::rootfind
