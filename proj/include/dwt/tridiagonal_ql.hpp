#pragma once

// Symmetric tridiagonal eigensolver: implicit-shift QL with accumulated
// rotations (the EISPACK tql2 scheme). Templated on the scalar so the same
// code runs in double and in quad precision.

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

namespace dwt {

class EigensolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

template <typename Real>
Real pythag(const Real& a, const Real& b) {
  using std::abs;
  using std::sqrt;
  const Real abs_a = abs(a);
  const Real abs_b = abs(b);
  if (abs_a > abs_b) {
    const Real r = abs_b / abs_a;
    return abs_a * sqrt(Real(1) + r * r);
  }
  if (abs_b == Real(0)) return Real(0);
  const Real r = abs_a / abs_b;
  return abs_b * sqrt(Real(1) + r * r);
}

/// Eigenvalues in `diag` (unsorted on return), eigenvectors as columns of the
/// column-major n x n matrix `vectors` (vectors[col * n + row]).
///
/// On entry `diag` holds the diagonal and `off` the n - 1 subdiagonal entries;
/// `vectors` must hold the identity (or an orthogonal basis to rotate).
template <typename Real>
void tql2(std::vector<Real>& diag, std::vector<Real> off, std::vector<Real>& vectors,
          int max_iterations_per_eigenvalue = 60) {
  using std::abs;
  const std::size_t n = diag.size();
  if (n == 0) return;
  if (off.size() + 1 != n || vectors.size() != n * n) {
    throw std::invalid_argument("tql2: inconsistent sizes");
  }
  off.push_back(Real(0));  // e[n-1] = 0 sentinel

  const Real eps = std::numeric_limits<Real>::epsilon();
  Real shift_total = 0;
  Real scale = 0;

  for (std::size_t l = 0; l < n; ++l) {
    // Find a negligible subdiagonal element.
    const Real row_norm = abs(diag[l]) + abs(off[l]);
    if (row_norm > scale) scale = row_norm;
    std::size_t m = l;
    while (m < n - 1) {
      if (abs(off[m]) <= eps * scale) break;
      ++m;
    }

    if (m > l) {
      int iterations = 0;
      do {
        if (++iterations > max_iterations_per_eigenvalue) {
          throw EigensolverError("tql2: no convergence for eigenvalue " + std::to_string(l));
        }
        // Wilkinson-type shift from the leading 2x2 block.
        Real g = diag[l];
        Real p = (diag[l + 1] - g) / (Real(2) * off[l]);
        Real r = pythag(p, Real(1));
        if (p < 0) r = -r;
        diag[l] = off[l] / (p + r);
        diag[l + 1] = off[l] * (p + r);
        const Real dl1 = diag[l + 1];
        Real h = g - diag[l];
        for (std::size_t i = l + 2; i < n; ++i) diag[i] -= h;
        shift_total += h;

        // Implicit QL sweep from m - 1 down to l.
        p = diag[m];
        Real c = 1, c2 = 1, c3 = 1;
        const Real el1 = off[l + 1];
        Real s = 0, s2 = 0;
        for (std::size_t ii = m; ii-- > l;) {
          c3 = c2;
          c2 = c;
          s2 = s;
          g = c * off[ii];
          h = c * p;
          r = pythag(p, off[ii]);
          off[ii + 1] = s * r;
          s = off[ii] / r;
          c = p / r;
          p = c * diag[ii] - s * g;
          diag[ii + 1] = h + s * (c * g + s * diag[ii]);

          Real* col_i = &vectors[ii * n];
          Real* col_next = &vectors[(ii + 1) * n];
          for (std::size_t k = 0; k < n; ++k) {
            h = col_next[k];
            col_next[k] = s * col_i[k] + c * h;
            col_i[k] = c * col_i[k] - s * h;
          }
        }
        p = -s * s2 * c3 * el1 * off[l] / dl1;
        off[l] = s * p;
        diag[l] = c * p;
      } while (abs(off[l]) > eps * scale);
    }
    diag[l] += shift_total;
    off[l] = 0;
  }
}

}  // namespace detail
}  // namespace dwt
