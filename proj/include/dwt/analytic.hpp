#pragma once

// Closed-form and perturbative results for the biased two-mode model.
// Everything that can leave double range is returned as a LogScalar.
// Energies share the caller's unit; hbar = 1, so times are hbar / energy.

#include <optional>

#include "dwt/log_scalar.hpp"

namespace dwt {

/// Where a number came from.
enum class Provenance { kExact, kPerturbative, kStirling, kExactDiagonalization };
const char* to_string(Provenance p);

/// Barrier regime from zeta = J / |U|.
struct RegimeTag {
  enum class Kind { kJosephson, kFock, kIntermediate };
  Kind kind = Kind::kIntermediate;
  double zeta = 0.0;
};
const char* to_string(RegimeTag::Kind kind);

/// Fock when zeta <= 0.2; Josephson when zeta / N >= 5; Intermediate otherwise.
inline constexpr double kFockZetaMax = 0.2;
inline constexpr double kJosephsonZetaOverNMin = 5.0;

/// Tags the regime; U = 0 counts as Josephson (zeta = infinity).
RegimeTag classify_regime(int n_atoms, double hopping, double interaction);

// -- Noninteracting (U = 0) -------------------------------------------------

/// P_0(t) = cos^{2N}(J t).
double noninteracting_p0(int n_atoms, double hopping, double t);

struct AmplitudeFrequency {
  double amplitude = 0.0;            ///< A = N / [1 + (dV/2J)^2]
  std::optional<double> frequency;   ///< omega = 2J sqrt(1 + (dV/2J)^2); empty for J = 0
};
AmplitudeFrequency tilted_amplitude_frequency(int n_atoms, double hopping, double tilt);

/// 2 J sqrt(N - 1): above this tilt fewer than one atom tunnels.
double suppression_threshold_noninteracting(int n_atoms, double hopping);

// -- Josephson regime -------------------------------------------------------

/// (N/2) [1 - cos(2 J t) cos^{N-1}(U t)], lowest order in N / zeta.
double josephson_mean(int n_atoms, double hopping, double interaction, double t);

struct EnvelopeTimes {
  std::optional<double> half_time;  ///< (1/U) arccos(2^{-1/(N-1)}); empty for N = 1
  double revival_period = 0.0;      ///< pi / U
};
/// Throws std::domain_error for U = 0.
EnvelopeTimes half_time_and_revival(int n_atoms, double interaction);

// -- Fock regime and tilt resonances ----------------------------------------

/// Delta E_N = 4U (zeta/2)^N N / (N-1)!, evaluated in log space. Uses |U|.
LogScalar splitting_symmetric(int n_atoms, double zeta, double interaction);

/// dV_p = 2 p U.
double resonance_tilt(int p, double interaction);

/// Delta E_N^p = 4U (zeta/2)^{N-p} (N-p) / (N-p-1)! * sqrt(binom(N, p)).
/// Throws std::domain_error unless 0 <= p < N.
LogScalar splitting_resonance(int n_atoms, int p, double zeta, double interaction);

/// Tilt deviation beyond which tunneling is suppressed: 2 Delta E_N^p / (N - p)
/// (2 Delta E_N / N for p = 0).
LogScalar suppression_window(int n_atoms, int p, double zeta, double interaction);

/// 2 pi / Delta E_N^p, in natural time units.
LogScalar resonance_period(int n_atoms, int p, double zeta, double interaction);

/// (N - p) sin^2(Delta E t / 2).
double resonance_mean_occupation(int n_atoms, int p, double splitting, double t);

/// ln(Delta E_N / Delta E_N^p); U cancels.
double log_tau_exact(int n_atoms, int p, double zeta);

struct StirlingEstimate {
  double log_tau = 0.0;
  /// The expansion assumes p' << N; flagged false unless 5 p' <= N.
  bool in_domain = false;
};
/// Stirling expansion of ln tau for an embedded NOON of p' = N - p atoms,
/// with n = N as in the printed expansion. Throws unless 1 <= p' <= N.
StirlingEstimate log_tau_stirling(int n_atoms, int noon_size, double zeta);

/// ln binom(n, k) via lgamma.
double log_binomial(int n, int k);

}  // namespace dwt
