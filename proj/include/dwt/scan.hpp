#pragma once

// Parameter sweeps and resonance detection.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "dwt/analytic.hpp"
#include "dwt/dynamics.hpp"
#include "dwt/log_scalar.hpp"
#include "dwt/model.hpp"
#include "dwt/units.hpp"

namespace dwt {

struct SweepRecord {
  std::string series;  ///< curve label; records of one series share it
  double x = 0.0;
  std::optional<double> amplitude;
  std::optional<double> frequency;
  std::optional<LogScalar> value;  ///< period, tau, ... in the sweep's units
  std::optional<Provenance> provenance;
  std::optional<RegimeTag> regime;
  std::optional<int> resonance_order;
  bool refined = false;  ///< point added by resonance refinement
  bool flagged = false;  ///< sampling cap hit, or outside an expansion's domain
};

struct SweepResult {
  std::string axis;      ///< name of x
  std::string quantity;  ///< what value / amplitude hold
  std::vector<double> grid;  ///< sorted unique x over all series
  std::vector<SweepRecord> records;
  /// Parameters and grid; no timestamp.
  nlohmann::ordered_json metadata = nlohmann::ordered_json::object();

  std::vector<std::string> series_labels() const;  ///< first-appearance order
};

struct TiltSweepOptions {
  /// Add points around every 2pU in range, out to +-refine_windows suppression
  /// windows at window / refine_divisions spacing.
  bool refine = true;
  int refine_windows = 3;
  int refine_divisions = 10;
  /// ED amplitude sweeps refuse N above this unless allow_large_n is set.
  int max_atoms = 12;
  bool allow_large_n = false;
  bool with_frequency = false;
  AmplitudeSampling sampling;
  unsigned threads = 0;
};

/// tunneling_amplitude at every tilt in tilt_grid (strictly increasing) plus
/// refinement points. Throws std::invalid_argument on a non-monotone grid or
/// when N exceeds the cap.
SweepResult tilt_sweep(const ModelParams& params, std::span<const double> tilt_grid,
                       const TiltSweepOptions& options = {});

/// Refinement points for tilt_sweep, clipped to [lo, hi]. Empty for U = 0.
std::vector<double> refinement_points(const ModelParams& params, double lo, double hi,
                                      const TiltSweepOptions& options = {});

struct DetectedResonance {
  int p = 0;              ///< nearest resonance order
  double tilt_peak = 0.0;
  double amplitude = 0.0;
  double offset = 0.0;    ///< |tilt_peak - 2pU|
  double width = 0.0;     ///< extent where amplitude >= peak / 2
  double local_step = 0.0;  ///< largest grid spacing adjacent to the peak
};

/// Local maxima of the amplitude standing >= min_prominence above the deeper
/// of the two surrounding minima. Grid ends count as maxima. p is 0 for U = 0.
std::vector<DetectedResonance> detect_resonances(const SweepResult& sweep, double interaction,
                                                 double min_prominence = 0.5);

/// T_N = 2 pi / Delta E_N for N in [n_first, n_last], log-domain. Times are
/// natural units, or ms when unit is kNanoKelvin.
SweepResult period_vs_n(double zeta, int n_first, int n_last, double interaction,
                        EnergyUnit unit = EnergyUnit::kNatural);

/// T_N^p for p = 0..N-1, one series per N.
SweepResult period_vs_p(double zeta, std::span<const int> n_list, double interaction,
                        EnergyUnit unit = EnergyUnit::kNatural);

/// tau for an embedded NOON of p' atoms (p = N - p') against N in
/// [p', max_multiple * p']: an exact and a Stirling series per p'.
/// Stirling points outside 5p' <= N are flagged.
SweepResult tau_vs_n(double zeta, std::span<const int> noon_sizes, int max_multiple = 10);

}  // namespace dwt
