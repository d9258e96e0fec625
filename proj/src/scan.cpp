#include "dwt/scan.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "dwt/parallel.hpp"
#include "dwt/spectrum.hpp"

namespace dwt {

namespace {

void require_increasing(std::span<const double> grid, const char* what) {
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) throw std::invalid_argument(std::string(what) + ": grid must be strictly increasing");
  }
}

std::vector<double> unique_sorted(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

nlohmann::ordered_json params_json(const ModelParams& params) {
  nlohmann::ordered_json j;
  j["n_atoms"] = params.n_atoms;
  j["hopping"] = params.hopping;
  j["interaction"] = params.interaction;
  j["tilt"] = params.tilt;
  return j;
}

}  // namespace

std::vector<std::string> SweepResult::series_labels() const {
  std::vector<std::string> labels;
  for (const auto& r : records) {
    if (std::find(labels.begin(), labels.end(), r.series) == labels.end()) labels.push_back(r.series);
  }
  return labels;
}

std::vector<double> refinement_points(const ModelParams& params, double lo, double hi,
                                      const TiltSweepOptions& options) {
  std::vector<double> points;
  if (params.interaction == 0.0 || params.hopping == 0.0 || options.refine_divisions <= 0) return points;
  const double zeta = params.zeta();
  const int reach = options.refine_windows * options.refine_divisions;
  for (int p = 0; p < params.n_atoms; ++p) {
    const double centre = resonance_tilt(p, params.interaction);
    const LogScalar window = suppression_window(params.n_atoms, p, zeta, params.interaction);
    if (window.ln_magnitude() < -kLogScalarDoubleLimit) continue;  // too narrow to resolve on any grid
    const double step = window.to_double() / options.refine_divisions;
    if (centre + reach * step < lo || centre - reach * step > hi) continue;
    for (int k = -reach; k <= reach; ++k) {
      const double x = centre + k * step;
      if (x >= lo && x <= hi) points.push_back(x);
    }
  }
  return points;
}

SweepResult tilt_sweep(const ModelParams& params, std::span<const double> tilt_grid,
                       const TiltSweepOptions& options) {
  params.validate();
  require_increasing(tilt_grid, "tilt_sweep");
  if (params.n_atoms > options.max_atoms && !options.allow_large_n) {
    throw std::invalid_argument("tilt_sweep: N = " + std::to_string(params.n_atoms) + " exceeds the ED cap of " +
                                std::to_string(options.max_atoms));
  }

  SweepResult result;
  result.axis = "tilt";
  result.quantity = "amplitude";
  result.metadata["sweep"] = "tilt";
  result.metadata["params"] = params_json(params);
  result.metadata["coarse_points"] = tilt_grid.size();
  if (!tilt_grid.empty()) {
    result.metadata["coarse_first"] = tilt_grid.front();
    result.metadata["coarse_last"] = tilt_grid.back();
  }
  result.metadata["refine"] = options.refine;
  result.metadata["refine_windows"] = options.refine_windows;
  result.metadata["refine_divisions"] = options.refine_divisions;
  result.metadata["min_weight"] = options.sampling.min_weight;
  result.metadata["per_slowest_period"] = options.sampling.per_slowest_period;
  result.metadata["per_fastest_period"] = options.sampling.per_fastest_period;
  result.metadata["max_samples"] = options.sampling.max_samples;
  if (tilt_grid.empty()) return result;

  std::vector<double> xs(tilt_grid.begin(), tilt_grid.end());
  std::vector<double> extra;
  if (options.refine) extra = refinement_points(params, tilt_grid.front(), tilt_grid.back(), options);
  const std::vector<double> coarse = xs;
  xs.insert(xs.end(), extra.begin(), extra.end());
  xs = unique_sorted(std::move(xs));

  result.grid = xs;
  result.records.resize(xs.size());
  parallel_for(
      xs.size(),
      [&](std::size_t i) {
        ModelParams point = params;
        point.tilt = xs[i];
        const SpectralDecomposition decomp = eigendecompose(point, Precision::kAuto);
        const AmplitudeResult amp = tunneling_amplitude(decomp, options.sampling);
        SweepRecord& r = result.records[i];
        r.x = xs[i];
        r.amplitude = amp.amplitude;
        if (options.with_frequency) r.frequency = dominant_frequency(decomp);
        r.provenance = Provenance::kExactDiagonalization;
        r.regime = classify_regime(point.n_atoms, point.hopping, point.interaction);
        r.resonance_order = resonance_order(point);
        r.refined = !std::binary_search(coarse.begin(), coarse.end(), xs[i]);
        r.flagged = amp.capped;
      },
      options.threads);
  return result;
}

std::vector<DetectedResonance> detect_resonances(const SweepResult& sweep, double interaction,
                                                 double min_prominence) {
  std::vector<double> x;
  std::vector<double> a;
  for (const auto& r : sweep.records) {
    if (!r.amplitude) continue;
    x.push_back(r.x);
    a.push_back(*r.amplitude);
  }
  std::vector<DetectedResonance> found;
  const std::size_t n = a.size();
  if (n == 0) return found;

  for (std::size_t i = 0; i < n; ++i) {
    const bool rises = i == 0 || a[i] > a[i - 1];
    // plateaus: take the first point, require a drop after them
    std::size_t j = i;
    while (j + 1 < n && a[j + 1] == a[i]) ++j;
    const bool falls = j + 1 == n || a[j + 1] < a[i];
    if (!rises || !falls || n == 1) continue;

    // prominence against the deeper-reaching side's minimum before higher ground
    double left_min = a[i];
    bool left_open = i == 0;
    for (std::size_t k = i; k-- > 0;) {
      if (a[k] > a[i]) break;
      left_min = std::min(left_min, a[k]);
    }
    double right_min = a[i];
    bool right_open = j + 1 == n;
    for (std::size_t k = j + 1; k < n; ++k) {
      if (a[k] > a[i]) break;
      right_min = std::min(right_min, a[k]);
    }
    double base;
    if (left_open) {
      base = right_min;
    } else if (right_open) {
      base = left_min;
    } else {
      base = std::max(left_min, right_min);
    }
    if (a[i] - base < min_prominence) continue;

    DetectedResonance d;
    d.tilt_peak = x[i];
    d.amplitude = a[i];
    const double half = 0.5 * a[i];
    std::size_t lo = i;
    while (lo > 0 && a[lo - 1] >= half) --lo;
    std::size_t hi = j;
    while (hi + 1 < n && a[hi + 1] >= half) ++hi;
    d.width = x[hi] - x[lo];
    if (i > 0) d.local_step = x[i] - x[i - 1];
    if (i + 1 < n) d.local_step = std::max(d.local_step, x[i + 1] - x[i]);
    if (interaction != 0.0) {
      d.p = static_cast<int>(std::lround(x[i] / (2.0 * interaction)));
      d.offset = std::fabs(x[i] - resonance_tilt(d.p, interaction));
    } else {
      d.offset = std::fabs(x[i]);
    }
    found.push_back(d);
    i = j;
  }
  return found;
}

SweepResult period_vs_n(double zeta, int n_first, int n_last, double interaction, EnergyUnit unit) {
  if (n_first < 1 || n_last < n_first) throw std::invalid_argument("period_vs_n: need 1 <= n_first <= n_last");
  SweepResult result;
  result.axis = "n_atoms";
  result.quantity = "period";
  result.metadata["sweep"] = "period_vs_n";
  result.metadata["zeta"] = zeta;
  result.metadata["interaction"] = interaction;
  result.metadata["unit"] = to_string(unit);
  result.metadata["n_first"] = n_first;
  result.metadata["n_last"] = n_last;
  const LogScalar scale = LogScalar::from_double(time_scale(unit));
  for (int n = n_first; n <= n_last; ++n) {
    SweepRecord r;
    r.series = "symmetric";
    r.x = n;
    r.value = resonance_period(n, 0, zeta, interaction) * scale;
    r.provenance = Provenance::kPerturbative;
    r.regime = classify_regime(n, zeta * std::fabs(interaction), interaction);
    r.resonance_order = 0;
    result.grid.push_back(n);
    result.records.push_back(r);
  }
  return result;
}

SweepResult period_vs_p(double zeta, std::span<const int> n_list, double interaction, EnergyUnit unit) {
  SweepResult result;
  result.axis = "p";
  result.quantity = "period";
  result.metadata["sweep"] = "period_vs_p";
  result.metadata["zeta"] = zeta;
  result.metadata["interaction"] = interaction;
  result.metadata["unit"] = to_string(unit);
  result.metadata["n_list"] = std::vector<int>(n_list.begin(), n_list.end());
  const LogScalar scale = LogScalar::from_double(time_scale(unit));
  std::vector<double> xs;
  for (int n : n_list) {
    if (n < 1) throw std::invalid_argument("period_vs_p: N must be >= 1");
    for (int p = 0; p < n; ++p) {
      SweepRecord r;
      r.series = "N=" + std::to_string(n);
      r.x = p;
      r.value = resonance_period(n, p, zeta, interaction) * scale;
      r.provenance = Provenance::kPerturbative;
      r.regime = classify_regime(n, zeta * std::fabs(interaction), interaction);
      r.resonance_order = p;
      xs.push_back(p);
      result.records.push_back(r);
    }
  }
  result.grid = unique_sorted(std::move(xs));
  return result;
}

SweepResult tau_vs_n(double zeta, std::span<const int> noon_sizes, int max_multiple) {
  if (max_multiple < 1) throw std::invalid_argument("tau_vs_n: max_multiple must be >= 1");
  SweepResult result;
  result.axis = "n_atoms";
  result.quantity = "tau";
  result.metadata["sweep"] = "tau_vs_n";
  result.metadata["zeta"] = zeta;
  result.metadata["noon_sizes"] = std::vector<int>(noon_sizes.begin(), noon_sizes.end());
  result.metadata["max_multiple"] = max_multiple;
  std::vector<double> xs;
  for (int q : noon_sizes) {
    if (q < 1) throw std::invalid_argument("tau_vs_n: NOON size must be >= 1");
    const std::string tag = "p'=" + std::to_string(q);
    for (const bool stirling : {false, true}) {
      for (int n = q; n <= max_multiple * q; ++n) {
        SweepRecord r;
        r.series = (stirling ? "stirling " : "exact ") + tag;
        r.x = n;
        r.resonance_order = n - q;
        if (stirling) {
          const StirlingEstimate est = log_tau_stirling(n, q, zeta);
          r.value = LogScalar::from_log(est.log_tau);
          r.provenance = Provenance::kStirling;
          r.flagged = !est.in_domain;
        } else {
          r.value = LogScalar::from_log(log_tau_exact(n, n - q, zeta));
          r.provenance = Provenance::kExact;
        }
        xs.push_back(n);
        result.records.push_back(r);
      }
    }
  }
  result.grid = unique_sorted(std::move(xs));
  return result;
}

}  // namespace dwt
