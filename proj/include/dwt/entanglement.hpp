#pragma once

// Left/right entanglement of a pure N-boson state. Because n_R = N - n_L, the
// reduced density matrix of either well is diagonal in the Fock basis with
// entries P_{n_L}; every measure here is a function of that distribution.

#include <optional>
#include <span>
#include <string>

#include "dwt/model.hpp"

namespace dwt {

/// Prefactor of the Q-measure (1 - sum P^2).
enum class QNormalization {
  /// N / (N + 1): an equal two-branch state gives N / [2(N + 1)]. Default.
  kTwoBranchMaximum,
  /// (N + 1) / N, the local-dimension normalization: uniform P gives 1.
  kLocalDimension,
};

double q_measure(const StateVector& psi, QNormalization norm = QNormalization::kTwoBranchMaximum);
double q_measure(std::span<const double> probabilities, QNormalization norm = QNormalization::kTwoBranchMaximum);

/// -sum P log_{N+1} P, with 0 log 0 = 0.
double entropy(const StateVector& psi);
double entropy(std::span<const double> probabilities);

inline constexpr double kDefaultSchmidtThreshold = 1e-12;

/// Number of P_{n_L} above threshold.
int schmidt_rank(const StateVector& psi, double threshold = kDefaultSchmidtThreshold);
int schmidt_rank(std::span<const double> probabilities, double threshold = kDefaultSchmidtThreshold);

/// Macroscopic-superposition size of a two-branch state |a, N-a> + |b, N-b>.
struct MssResult {
  int branch_low = 0;   ///< a: smaller left-well occupation
  int branch_high = 0;  ///< b
  int n_min_left = 0;   ///< a + 1 atoms to count in the left well
  int n_min_right = 0;  ///< (N - b) + 1 atoms to count in the right well
  double c_left = 0.0;  ///< N / n_min_left
  double c_right = 0.0;
  double c_max = 0.0;
};

struct MssOptions {
  double branch_threshold = 0.1;  ///< a Fock index is a branch when P >= this
  double min_joint_weight = 0.9;  ///< the two branches together
};

/// Empty when the state is not a two-branch superposition.
std::optional<MssResult> mss_measure(const StateVector& psi, const MssOptions& options = {});
std::optional<MssResult> mss_measure(std::span<const double> probabilities, const MssOptions& options = {});

struct EntanglementReport {
  double time = 0.0;
  double q_measure = 0.0;
  double entropy = 0.0;
  int schmidt_rank = 0;
  double schmidt_threshold = kDefaultSchmidtThreshold;
  std::optional<MssResult> mss;

  /// Flat JSON object.
  std::string to_json() const;
};

struct EntanglementOptions {
  QNormalization q_normalization = QNormalization::kTwoBranchMaximum;
  /// Overrides the regime-based Schmidt threshold when set.
  std::optional<double> schmidt_threshold;
  MssOptions mss;
};

/// All measures at once.
EntanglementReport entanglement_report(const StateVector& psi, double time, double schmidt_threshold,
                                       const EntanglementOptions& options = {});

/// Schmidt threshold used for reports: zeta^2 in the Fock regime, where exact
/// states carry O(zeta^2) admixtures of every Fock state; 1e-12 otherwise.
double report_schmidt_threshold(const ModelParams& params);

/// Evolves |0, N> to a fraction of the tunneling period (0.25 by default) and
/// reports every measure. The period comes from tunneling_period().
EntanglementReport report_at_period_fraction(const ModelParams& params, double fraction,
                                             const EntanglementOptions& options = {});
EntanglementReport report_at_quarter_period(const ModelParams& params, const EntanglementOptions& options = {});

}  // namespace dwt
