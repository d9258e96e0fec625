#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "dwt/analytic.hpp"
#include "dwt/log_scalar.hpp"
#include "dwt/model.hpp"
#include "dwt/spectrum.hpp"

namespace dwt {

/// Sampled trajectory: full distribution P_{n_L}(t) plus mean and variance.
struct TimeSeries {
  int n_atoms = 0;
  std::vector<double> times;                      ///< strictly increasing
  std::vector<std::vector<double>> distribution;  ///< one row of N + 1 probabilities per time
  std::vector<double> mean;
  std::vector<double> variance;

  std::size_t size() const { return times.size(); }
};

/// Spectral propagator exp(-i H t) for one initial state.
///
/// Phases are taken relative to the level with the largest overlap, using the
/// accurate gaps of the decomposition, and the global phase is restored
/// separately; this keeps splittings of 1e-20 meaningful at t ~ 1e20.
class Propagator {
 public:
  /// Throws std::invalid_argument on dimension mismatch.
  Propagator(const SpectralDecomposition& decomp, const StateVector& psi0);

  StateVector state_at(double t) const;
  /// <phi_j | psi0>
  std::span<const Complex> overlaps() const { return overlaps_; }
  /// E_j - E_ref for the largest-overlap level ref.
  std::span<const double> relative_energies() const { return relative_energies_; }

 private:
  int n_atoms_;
  std::size_t dim_;
  std::vector<double> vectors_;  // column-major
  std::vector<Complex> overlaps_;
  std::vector<double> relative_energies_;
  double reference_energy_;
};

/// |psi(t)> = sum_j exp(-i E_j t) |phi_j><phi_j|psi0>
StateVector evolve(const SpectralDecomposition& decomp, const StateVector& psi0, double t);

struct Observables {
  std::vector<double> probabilities;  ///< P_{n_L} = |c_{n_L}|^2
  double mean = 0.0;                  ///< sum n P_n
  double variance = 0.0;              ///< sum n^2 P_n - mean^2
};
Observables observables(const StateVector& psi);

/// Evaluates the state on every grid time. Throws std::invalid_argument if the
/// grid is not strictly increasing. Grid points are evaluated in parallel.
TimeSeries trajectory(const SpectralDecomposition& decomp, const StateVector& psi0,
                      std::span<const double> t_grid);
TimeSeries trajectory(const ModelParams& params, const StateVector& psi0, std::span<const double> t_grid,
                      Precision precision = Precision::kAuto);

/// n points evenly spaced over [t_begin, t_end], inclusive.
std::vector<double> linear_grid(double t_begin, double t_end, std::size_t n);

// -- Tunneling amplitude ----------------------------------------------------

/// Sampling contract for tunneling_amplitude.
struct AmplitudeSampling {
  double min_weight = 1e-6;              ///< levels that set the Bohr frequencies
  std::size_t per_slowest_period = 64;
  std::size_t per_fastest_period = 8;
  std::size_t max_samples = std::size_t{1} << 20;
};

struct AmplitudeResult {
  double amplitude = 0.0;    ///< max sampled mean occupation of the left well
  double time_of_max = 0.0;
  double window = 0.0;       ///< sampled interval [0, window): one slowest Bohr period
  std::size_t samples = 0;
  bool capped = false;       ///< sample cap hit; fast components are undersampled
  std::size_t active_levels = 0;
};

/// max_t nbar_L(t) starting from |0, N>, sampled over one period of the
/// slowest Bohr frequency among levels with overlap weight >= min_weight, at
/// >= 64 points per slowest and >= 8 per fastest period, capped at 2^20.
/// Zero when fewer than two levels carry weight.
AmplitudeResult tunneling_amplitude(const SpectralDecomposition& decomp,
                                    const AmplitudeSampling& sampling = {});
AmplitudeResult tunneling_amplitude(const ModelParams& params, const AmplitudeSampling& sampling = {});

/// Bohr frequency carrying the largest term of nbar_L(t) from |0, N>.
/// Empty when nbar_L is constant.
std::optional<double> dominant_frequency(const SpectralDecomposition& decomp);

// -- Tunneling period -------------------------------------------------------

struct PeriodEstimate {
  LogScalar period;  ///< natural time units
  Provenance provenance = Provenance::kExactDiagonalization;
  RegimeTag regime;
  /// p when the tilt sits on a resonance 2pU (0 for the symmetric well).
  std::optional<int> resonance_order;
  /// True when a closed form exists for comparison (Fock regime, or U = 0).
  bool analytic_cross_check = false;
  std::optional<LogScalar> analytic_period;
  /// Splitting used, for ED-based values.
  std::optional<double> splitting;
};

/// 2 pi / Delta E for the top pair, or the resonant pair when dV = 2pU.
/// ED when the working precision resolves the gap, the log-domain splitting
/// formulas otherwise.
PeriodEstimate tunneling_period(const ModelParams& params);

/// p when tilt = 2pU with 0 <= p < N (relative tolerance 1e-9); empty otherwise.
std::optional<int> resonance_order(const ModelParams& params);

/// Oscillation frequency of a sampled signal from the spacing of its maxima
/// (parabolic peak refinement, least-squares slope of peak times). Only maxima
/// in the upper half of the signal range count. Empty with fewer than two.
std::optional<double> fitted_frequency(std::span<const double> times, std::span<const double> values);

}  // namespace dwt
