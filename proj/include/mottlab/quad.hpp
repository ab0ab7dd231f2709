#pragma once

#include <functional>
#include <span>
#include <vector>

namespace mottlab::quad {

struct Result {
  double value = 0.0;
  double error = 0.0;  // estimated absolute error
  int evaluations = 0;
};

/// Gauss-Legendre nodes/weights on [-1, 1]; cached per order.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const GaussRule& gauss_legendre_rule(int order);

/// Fixed-order Gauss-Legendre on [a, b].
double gauss_legendre(const std::function<double(double)>& f, double a,
                      double b, int order);

/// Gauss-Legendre with order doubling until the value settles to rel_tol.
Result gauss_doubling(const std::function<double(double)>& f, double a,
                      double b, double rel_tol, int initial_order = 16,
                      int max_order = 4096);

/// Tanh-sinh (double exponential) quadrature on (a, b). Handles integrable
/// endpoint singularities; refines the step until rel_tol is met.
Result tanh_sinh(const std::function<double(double)>& f, double a, double b,
                 double rel_tol = 1e-12, int max_level = 12);

/// Recursive adaptive Gauss-Legendre (15 vs 31 point comparison). abs_floor
/// stops refinement of segments that cannot matter at the caller's scale.
Result adaptive(const std::function<double(double)>& f, double a, double b,
                double rel_tol = 1e-10, double abs_floor = 0.0,
                int max_depth = 28);

/// Composite Simpson on a uniform grid of tabulated values (odd count
/// preferred; a trapezoid patch covers an even tail point).
double simpson_uniform(std::span<const double> values, double step);

}  // namespace mottlab::quad
