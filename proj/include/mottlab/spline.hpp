#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace mottlab {

/// Natural cubic spline on a uniform grid [0, step*(n-1)]. Evaluations past
/// the table return 0 (the tabulated kernels are negligible there).
class UniformSpline {
 public:
  UniformSpline() = default;
  UniformSpline(std::vector<double> values, double step)
      : y_(std::move(values)), step_(step) {
    build();
  }

  [[nodiscard]] double operator()(double x) const {
    const std::size_t n = y_.size();
    if (n == 0) return 0.0;
    if (x <= 0.0) return y_.front();
    const double t = x / step_;
    const auto i = static_cast<std::size_t>(t);
    if (i + 1 >= n) return 0.0;
    const double a = t - static_cast<double>(i);
    const double b = 1.0 - a;
    return b * y_[i] + a * y_[i + 1] +
           ((b * b * b - b) * m_[i] + (a * a * a - a) * m_[i + 1]) *
               (step_ * step_) / 6.0;
  }

  [[nodiscard]] double extent() const {
    return y_.empty() ? 0.0 : step_ * static_cast<double>(y_.size() - 1);
  }

 private:
  void build() {
    const std::size_t n = y_.size();
    m_.assign(n, 0.0);
    if (n < 3) return;
    // Tridiagonal system for interior second derivatives: sub/super = 1,
    // diagonal = 4 in the h-scaled form m_{i-1} + 4 m_i + m_{i+1} = rhs_i.
    std::vector<double> rhs(n, 0.0);
    for (std::size_t i = 1; i + 1 < n; ++i)
      rhs[i] = 6.0 * (y_[i + 1] - 2.0 * y_[i] + y_[i - 1]) / (step_ * step_);

    std::vector<double> c_prime(n, 0.0);
    c_prime[1] = 1.0 / 4.0;
    rhs[1] /= 4.0;
    for (std::size_t i = 2; i + 1 < n; ++i) {
      const double denom = 4.0 - c_prime[i - 1];
      c_prime[i] = 1.0 / denom;
      rhs[i] = (rhs[i] - rhs[i - 1]) / denom;
    }
    for (std::size_t i = n - 2; i >= 1; --i) {
      m_[i] = rhs[i] - c_prime[i] * m_[i + 1];
      if (i == 1) break;
    }
  }

  std::vector<double> y_;
  std::vector<double> m_;
  double step_ = 1.0;
};

}  // namespace mottlab
