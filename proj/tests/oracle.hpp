#pragma once

// Independent eigen-oracle for small symmetric tridiagonal matrices:
// Sturm-sequence bisection for eigenvalues, inverse iteration for vectors.
// Long double throughout.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace oracle {

using Real = long double;

// Number of eigenvalues strictly below x.
inline int sturm_count(const std::vector<Real>& d, const std::vector<Real>& e, Real x) {
  int count = 0;
  Real q = 1;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const Real e2 = i == 0 ? 0 : e[i - 1] * e[i - 1];
    q = d[i] - x - (i == 0 ? 0 : e2 / q);
    if (q == 0) q = -1e-300L;
    if (q < 0) ++count;
  }
  return count;
}

inline std::vector<Real> eigenvalues(const std::vector<Real>& d, const std::vector<Real>& e) {
  const std::size_t n = d.size();
  Real lo = d[0], hi = d[0];
  for (std::size_t i = 0; i < n; ++i) {
    const Real r = (i > 0 ? std::fabs(e[i - 1]) : 0) + (i + 1 < n ? std::fabs(e[i]) : 0);
    lo = std::min(lo, d[i] - r);
    hi = std::max(hi, d[i] + r);
  }
  lo -= 1;
  hi += 1;
  std::vector<Real> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    Real a = lo, b = hi;
    for (int it = 0; it < 200; ++it) {
      const Real m = 0.5L * (a + b);
      if (sturm_count(d, e, m) > static_cast<int>(k)) {
        b = m;
      } else {
        a = m;
      }
    }
    out[k] = 0.5L * (a + b);
  }
  return out;
}

// Solves (T - shift) x = rhs by Thomas elimination.
inline std::vector<Real> solve_shifted(const std::vector<Real>& d, const std::vector<Real>& e, Real shift,
                                       std::vector<Real> rhs) {
  const std::size_t n = d.size();
  std::vector<Real> c(n, 0), diag(n);
  for (std::size_t i = 0; i < n; ++i) diag[i] = d[i] - shift;
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) {
      const Real w = e[i - 1] / diag[i - 1];
      diag[i] -= w * c[i - 1];
      rhs[i] -= w * rhs[i - 1];
    }
    if (diag[i] == 0) diag[i] = 1e-30L;
    if (i + 1 < n) c[i] = e[i];
  }
  std::vector<Real> x(n);
  for (std::size_t i = n; i-- > 0;) {
    x[i] = (rhs[i] - (i + 1 < n ? c[i] * x[i + 1] : 0)) / diag[i];
  }
  return x;
}

inline std::vector<Real> eigenvector(const std::vector<Real>& d, const std::vector<Real>& e, Real lambda) {
  const std::size_t n = d.size();
  std::vector<Real> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = 1.0L + 0.1L * static_cast<Real>(i);
  const Real shift = lambda + 1e-14L * (1 + std::fabs(lambda));
  for (int it = 0; it < 6; ++it) {
    x = solve_shifted(d, e, shift, x);
    Real norm = 0;
    for (Real v : x) norm += v * v;
    norm = std::sqrt(norm);
    for (Real& v : x) v /= norm;
  }
  return x;
}

}  // namespace oracle
