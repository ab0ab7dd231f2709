#pragma once

#include <span>
#include <vector>

namespace mottlab::tridiag {

/// Eigenpairs of a symmetric tridiagonal matrix; vectors are stored
/// column-major, one eigenvector per eigenvalue, each of length n.
struct EigenSelection {
  std::vector<double> values;
  std::vector<double> vectors;  // empty when only values were requested
  int n = 0;

  [[nodiscard]] std::span<const double> vector(std::size_t k) const {
    return {vectors.data() + k * static_cast<std::size_t>(n),
            static_cast<std::size_t>(n)};
  }
};

/// All eigenvalues in (vl, vu], ascending (LAPACK dstevr, values only).
std::vector<double> eigenvalues_in_range(std::span<const double> diag,
                                         std::span<const double> off,
                                         double vl, double vu);

/// Eigenpairs with eigenvalues in (vl, vu].
EigenSelection eigenpairs_in_range(std::span<const double> diag,
                                   std::span<const double> off, double vl,
                                   double vu);

/// The k lowest eigenpairs.
EigenSelection lowest_eigenpairs(std::span<const double> diag,
                                 std::span<const double> off, int k);

}  // namespace mottlab::tridiag
