#include "mottlab/tridiag.hpp"

#include <lapacke.h>

#include <algorithm>

#include "mottlab/errors.hpp"

namespace mottlab::tridiag {

namespace {

EigenSelection run_stevr(std::span<const double> diag,
                         std::span<const double> off, char range, double vl,
                         double vu, int il, int iu, bool want_vectors) {
  const auto n = static_cast<lapack_int>(diag.size());
  if (n < 1) throw InvalidParameter("diag", "matrix must be non-empty");
  if (off.size() + 1 != diag.size())
    throw InvalidParameter("off", "needs size n-1");

  std::vector<double> d(diag.begin(), diag.end());
  std::vector<double> e(off.begin(), off.end());
  e.resize(diag.size());  // lapacke wants n-sized scratch for e

  EigenSelection out;
  out.n = static_cast<int>(n);
  out.values.resize(diag.size());
  std::vector<double> z;
  if (want_vectors) z.resize(diag.size() * diag.size());
  std::vector<lapack_int> isuppz(2 * diag.size());
  lapack_int m = 0;

  const lapack_int info = LAPACKE_dstevr(
      LAPACK_COL_MAJOR, want_vectors ? 'V' : 'N', range, n, d.data(),
      e.data(), vl, vu, il, iu, 0.0, &m, out.values.data(),
      want_vectors ? z.data() : nullptr, n, isuppz.data());
  if (info != 0)
    throw NumericFailure("dstevr failed", static_cast<double>(info));

  out.values.resize(static_cast<std::size_t>(m));
  if (want_vectors) {
    z.resize(static_cast<std::size_t>(m) * diag.size());
    out.vectors = std::move(z);
  }
  return out;
}

}  // namespace

std::vector<double> eigenvalues_in_range(std::span<const double> diag,
                                         std::span<const double> off,
                                         double vl, double vu) {
  auto sel = run_stevr(diag, off, 'V', vl, vu, 0, 0, false);
  return std::move(sel.values);
}

EigenSelection eigenpairs_in_range(std::span<const double> diag,
                                   std::span<const double> off, double vl,
                                   double vu) {
  return run_stevr(diag, off, 'V', vl, vu, 0, 0, true);
}

EigenSelection lowest_eigenpairs(std::span<const double> diag,
                                 std::span<const double> off, int k) {
  k = std::min<int>(k, static_cast<int>(diag.size()));
  return run_stevr(diag, off, 'I', 0.0, 0.0, 1, k, true);
}

}  // namespace mottlab::tridiag
