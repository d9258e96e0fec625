#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "dwt/model.hpp"
#include "dwt/tridiagonal_ql.hpp"

namespace dwt {

/// Working precision of an eigendecomposition.
enum class Precision {
  kDouble,
  kExtended,  ///< IEEE quad (113-bit significand)
  kAuto,      ///< double, redone in quad if some level gap is below 1e-10 * max|H|
};

/// Relative gap (to max|H|) below which a double-precision gap is not trusted.
inline constexpr double kDoubleGapFloor = 1e-10;

/// Smallest reliably resolved gap for a matrix with max|H| = matrix_scale:
/// 1e-10 * max|H|, scaled by eps_quad / eps_double in extended precision.
double resolution_floor(Precision precision, double matrix_scale);

/// Eigenvalues (ascending) and orthonormal eigenvectors of the Hamiltonian.
///
/// Besides the eigenvalues, adjacent level gaps are kept as computed in the
/// working precision, so differences between nearly degenerate levels survive
/// the rounding to double even when the levels themselves do not.
class SpectralDecomposition {
 public:
  /// Expects ascending eigenvalues; fixes eigenvector signs. `vectors` is column-major.
  SpectralDecomposition(std::vector<double> eigenvalues, std::vector<double> gaps,
                        std::vector<double> vectors, Precision precision, double matrix_scale);

  std::size_t dimension() const { return eigenvalues_.size(); }
  int n_atoms() const { return static_cast<int>(eigenvalues_.size()) - 1; }
  std::span<const double> eigenvalues() const { return eigenvalues_; }
  double eigenvalue(std::size_t k) const { return eigenvalues_[k]; }
  /// Column k, paired with eigenvalue(k).
  std::span<const double> eigenvector(std::size_t k) const;
  double component(std::size_t row, std::size_t k) const { return vectors_[k * dimension() + row]; }

  /// E_{k+1} - E_k
  double gap(std::size_t k) const { return gaps_[k]; }
  std::span<const double> gaps() const { return gaps_; }
  /// E_upper - E_lower summed from adjacent gaps (accurate for close levels).
  double energy_difference(std::size_t lower, std::size_t upper) const;

  Precision precision() const { return precision_; }
  /// max |H_ij| of the decomposed matrix.
  double matrix_scale() const { return matrix_scale_; }
  /// Smallest gap this decomposition resolves reliably.
  double resolution_floor() const { return dwt::resolution_floor(precision_, matrix_scale_); }
  bool resolves(double gap) const { return gap >= resolution_floor(); }

 private:
  std::vector<double> eigenvalues_;
  std::vector<double> gaps_;
  std::vector<double> vectors_;
  Precision precision_;
  double matrix_scale_;
};

/// Double-precision eigendecomposition of a symmetric tridiagonal matrix.
/// Throws EigensolverError if QL does not converge.
SpectralDecomposition eigendecompose(const TridiagonalMatrix& h);

/// Eigendecomposition of build_hamiltonian(params) in the requested precision.
/// In extended precision the matrix elements themselves are formed in quad.
SpectralDecomposition eigendecompose(const ModelParams& params, Precision precision = Precision::kAuto);

/// E_N - E_{N-1}: splitting of the two highest levels.
double splitting_top_pair(const SpectralDecomposition& decomp);

/// Quasi-degenerate eigenpair carrying the resonance branches |0,N> and |N-p,p>.
struct ResonantPair {
  std::size_t lower = 0;  ///< eigen-index of the lower level
  std::size_t upper = 0;
  std::size_t branch_right = 0;  ///< Fock index 0
  std::size_t branch_left = 0;   ///< Fock index N - p
  double gap = 0.0;
  double branch_support = 0.0;    ///< mean weight of the two vectors on the branch indices
  double branch_asymmetry = 0.0;  ///< max over the two vectors of |w_a - w_b| / (w_a + w_b)
};

inline constexpr double kResonanceMinSupport = 0.9;
inline constexpr double kResonanceMaxAsymmetry = 0.05;

/// Finds the eigenpair whose vectors live on Fock indices {0, N - p} as
/// symmetric/antisymmetric combinations. Empty when not at resonance.
/// Throws std::invalid_argument unless 0 <= p < N.
std::optional<ResonantPair> near_degenerate_pair_at_resonance(const SpectralDecomposition& decomp, int p);

}  // namespace dwt
