#pragma once

#include <complex>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dwt/units.hpp"

namespace dwt {

using Complex = std::complex<double>;

/// Physical knobs of the biased two-mode (LMG) Hamiltonian
///
///   H = -J sum_{j != j'} b_j^+ b_j' + U sum_j n_j (n_j - 1) + dV n_L
///
/// Note the interaction has no 1/2, so the p-th tilt resonance sits at 2pU.
/// J is kept nonnegative; the sign of J is a gauge choice.
struct ModelParams {
  int n_atoms = 1;
  double hopping = 0.0;      ///< J >= 0
  double interaction = 0.0;  ///< U
  double tilt = 0.0;         ///< dV, raises the left well when positive
  /// hbar * omega of each well, same energy unit as J and U. Only used by validity_chi().
  std::optional<double> trap_frequency;

  /// Throws std::invalid_argument when N < 1, J < 0, a value is non-finite,
  /// or the trap frequency is not positive.
  void validate() const;

  /// zeta = J / |U|; +infinity for U = 0.
  double zeta() const;
  std::size_t dimension() const { return static_cast<std::size_t>(n_atoms) + 1; }

  /// chi = (N^2 - 1) U / (2 hbar omega), when the trap frequency is known.
  std::optional<double> chi() const;
};

/// N + 1 complex amplitudes c_{n_L} over Fock states |n_L, N - n_L>.
class StateVector {
 public:
  /// Throws std::invalid_argument if the amplitudes are not normalized to 1e-12
  /// or the size does not match N + 1.
  StateVector(int n_atoms, std::vector<Complex> amplitudes);

  /// Builds a state without the normalization check (used by propagation,
  /// where the norm drifts at round-off level).
  static StateVector unchecked(int n_atoms, std::vector<Complex> amplitudes);

  /// Single Fock state |n_left, N - n_left>.
  static StateVector fock(int n_atoms, int n_left);

  int n_atoms() const { return n_atoms_; }
  std::size_t size() const { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const { return amplitudes_; }
  const Complex& operator[](std::size_t n_left) const { return amplitudes_[n_left]; }
  double norm_squared() const;

  /// The state with n_L -> N - n_L (swaps the wells).
  StateVector reflected() const;

 private:
  StateVector() = default;
  int n_atoms_ = 0;
  std::vector<Complex> amplitudes_;
};

inline constexpr double kNormalizationTolerance = 1e-12;

/// Real symmetric tridiagonal matrix; off_diagonal[i] couples rows i and i + 1.
struct TridiagonalMatrix {
  std::vector<double> diagonal;
  std::vector<double> off_diagonal;

  std::size_t size() const { return diagonal.size(); }
  /// max |H_ij|
  double max_abs() const;
  /// Row-major dense copy, for tests and small oracles.
  std::vector<double> to_dense() const;
  /// y = H x
  std::vector<Complex> apply(std::span<const Complex> x) const;
};

/// Fock-space matrix of the Hamiltonian:
///   H[n][n]   = U [n(n-1) + (N-n)(N-n-1)] + dV n
///   H[n][n+1] = -J sqrt((n+1)(N-n))
TridiagonalMatrix build_hamiltonian(const ModelParams& params);

/// Result of the single-mode validity check.
struct ValidityCheck {
  enum class Status { kValid, kInvalid, kUnknown };
  Status status = Status::kUnknown;
  std::optional<double> chi;  ///< absent when the trap frequency is unknown
};

/// chi = (N^2-1) U / (2 hbar omega); valid when chi <= 1. Unknown without a trap frequency.
ValidityCheck validity_chi(const ModelParams& params);

/// |0, N>: every atom in the right well.
StateVector initial_state_all_right(int n_atoms);

/// A parameter file: flat JSON object with n_atoms, hopping, interaction,
/// tilt, optional trap_frequency and unit ("natural" | "nK").
struct ParameterSet {
  ModelParams params;
  EnergyUnit unit = EnergyUnit::kNatural;
};

ParameterSet parse_parameter_set(const std::string& json_text);
ParameterSet load_parameter_set(const std::filesystem::path& path);
std::string to_json(const ParameterSet& set);

const char* to_string(EnergyUnit unit);

}  // namespace dwt
