#include "dwt/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "dwt/parallel.hpp"

namespace dwt {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Levels below this overlap are dropped from the amplitude signal entirely.
constexpr double kNegligibleOverlap = 1e-8;
constexpr double kNegligibleTerm = 1e-13;
// Phase rotors are re-seeded from exact values this often.
constexpr std::size_t kReseedInterval = 256;

std::size_t largest_overlap_level(std::span<const Complex> overlaps) {
  std::size_t best = 0;
  for (std::size_t j = 1; j < overlaps.size(); ++j) {
    if (std::norm(overlaps[j]) > std::norm(overlaps[best])) best = j;
  }
  return best;
}

std::vector<double> energies_relative_to(const SpectralDecomposition& decomp, std::size_t ref) {
  const std::size_t n = decomp.dimension();
  std::vector<double> rel(n, 0.0);
  for (std::size_t j = ref + 1; j < n; ++j) rel[j] = rel[j - 1] + decomp.gap(j - 1);
  for (std::size_t j = ref; j-- > 0;) rel[j] = rel[j + 1] - decomp.gap(j);
  return rel;
}

// nbar(t) = constant + sum coeff_m cos(freq_m t), from X = V^T n V.
struct MeanSignal {
  double constant = 0.0;
  std::vector<double> coeff;
  std::vector<double> freq;
};

MeanSignal expand_mean(const SpectralDecomposition& decomp, std::span<const double> c, std::span<const double> rel) {
  const std::size_t dim = decomp.dimension();
  std::vector<std::size_t> kept;
  for (std::size_t j = 0; j < dim; ++j) {
    if (std::fabs(c[j]) >= kNegligibleOverlap) kept.push_back(j);
  }
  auto number_element = [&](std::size_t j, std::size_t k) {
    double x = 0.0;
    for (std::size_t n = 1; n < dim; ++n) x += static_cast<double>(n) * decomp.component(n, j) * decomp.component(n, k);
    return x;
  };
  MeanSignal signal;
  for (std::size_t a = 0; a < kept.size(); ++a) {
    const std::size_t j = kept[a];
    signal.constant += c[j] * c[j] * number_element(j, j);
    for (std::size_t b = a + 1; b < kept.size(); ++b) {
      const std::size_t k = kept[b];
      const double term = 2.0 * c[j] * c[k] * number_element(j, k);
      if (std::fabs(term) < kNegligibleTerm) continue;
      signal.coeff.push_back(term);
      signal.freq.push_back(rel[k] - rel[j]);
    }
  }
  return signal;
}

std::vector<double> initial_overlaps(const SpectralDecomposition& decomp) {
  std::vector<double> c(decomp.dimension());
  for (std::size_t j = 0; j < c.size(); ++j) c[j] = decomp.component(0, j);  // <phi_j|0,N>
  return c;
}

std::size_t heaviest(std::span<const double> c) {
  std::size_t ref = 0;
  for (std::size_t j = 1; j < c.size(); ++j) {
    if (c[j] * c[j] > c[ref] * c[ref]) ref = j;
  }
  return ref;
}

}  // namespace

Propagator::Propagator(const SpectralDecomposition& decomp, const StateVector& psi0)
    : n_atoms_(decomp.n_atoms()), dim_(decomp.dimension()) {
  if (psi0.size() != dim_) throw std::invalid_argument("Propagator: state and spectrum dimensions differ");
  vectors_.resize(dim_ * dim_);
  overlaps_.resize(dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    const auto v = decomp.eigenvector(j);
    std::copy(v.begin(), v.end(), vectors_.begin() + static_cast<std::ptrdiff_t>(j * dim_));
    Complex c = 0.0;
    for (std::size_t n = 0; n < dim_; ++n) c += v[n] * psi0[n];
    overlaps_[j] = c;
  }
  const std::size_t ref = largest_overlap_level(overlaps_);
  relative_energies_ = energies_relative_to(decomp, ref);
  reference_energy_ = decomp.eigenvalue(ref);
}

StateVector Propagator::state_at(double t) const {
  std::vector<Complex> psi(dim_, Complex(0.0));
  for (std::size_t j = 0; j < dim_; ++j) {
    if (overlaps_[j] == Complex(0.0)) continue;
    const Complex a = overlaps_[j] * std::polar(1.0, -relative_energies_[j] * t);
    const double* v = &vectors_[j * dim_];
    for (std::size_t n = 0; n < dim_; ++n) psi[n] += a * v[n];
  }
  const Complex global = std::polar(1.0, -reference_energy_ * t);
  for (Complex& c : psi) c *= global;
  return StateVector::unchecked(n_atoms_, std::move(psi));
}

StateVector evolve(const SpectralDecomposition& decomp, const StateVector& psi0, double t) {
  return Propagator(decomp, psi0).state_at(t);
}

Observables observables(const StateVector& psi) {
  Observables obs;
  obs.probabilities.resize(psi.size());
  double second = 0.0;
  for (std::size_t n = 0; n < psi.size(); ++n) {
    const double p = std::norm(psi[n]);
    obs.probabilities[n] = p;
    obs.mean += n * p;
    second += static_cast<double>(n * n) * p;
  }
  obs.variance = std::max(0.0, second - obs.mean * obs.mean);
  return obs;
}

std::vector<double> linear_grid(double t_begin, double t_end, std::size_t n) {
  std::vector<double> grid(n);
  if (n == 1) {
    grid[0] = t_begin;
    return grid;
  }
  for (std::size_t i = 0; i < n; ++i) {
    grid[i] = t_begin + (t_end - t_begin) * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  return grid;
}

TimeSeries trajectory(const SpectralDecomposition& decomp, const StateVector& psi0,
                      std::span<const double> t_grid) {
  for (std::size_t i = 1; i < t_grid.size(); ++i) {
    if (!(t_grid[i] > t_grid[i - 1])) throw std::invalid_argument("trajectory: time grid must increase");
  }
  const Propagator propagator(decomp, psi0);
  TimeSeries series;
  series.n_atoms = decomp.n_atoms();
  series.times.assign(t_grid.begin(), t_grid.end());
  series.distribution.resize(t_grid.size());
  series.mean.resize(t_grid.size());
  series.variance.resize(t_grid.size());
  parallel_for(t_grid.size(), [&](std::size_t i) {
    Observables obs = observables(propagator.state_at(t_grid[i]));
    series.distribution[i] = std::move(obs.probabilities);
    series.mean[i] = obs.mean;
    series.variance[i] = obs.variance;
  });
  return series;
}

TimeSeries trajectory(const ModelParams& params, const StateVector& psi0, std::span<const double> t_grid,
                      Precision precision) {
  return trajectory(eigendecompose(params, precision), psi0, t_grid);
}

// ---------------------------------------------------------------------------

AmplitudeResult tunneling_amplitude(const SpectralDecomposition& decomp, const AmplitudeSampling& sampling) {
  const std::size_t dim = decomp.dimension();
  const std::vector<double> c = initial_overlaps(decomp);
  const std::vector<double> rel = energies_relative_to(decomp, heaviest(c));

  AmplitudeResult result;
  std::vector<std::size_t> active;
  for (std::size_t j = 0; j < dim; ++j) {
    if (c[j] * c[j] >= sampling.min_weight) active.push_back(j);
  }
  result.active_levels = active.size();
  if (active.size() < 2) return result;

  double slowest = std::numeric_limits<double>::infinity();
  double fastest = 0.0;
  for (std::size_t a = 0; a < active.size(); ++a) {
    for (std::size_t b = a + 1; b < active.size(); ++b) {
      const double w = std::fabs(rel[active[b]] - rel[active[a]]);
      if (w <= 0.0) continue;
      slowest = std::min(slowest, w);
      fastest = std::max(fastest, w);
    }
  }
  if (!std::isfinite(slowest)) return result;

  result.window = kTwoPi / slowest;
  const double wanted = std::max<double>(static_cast<double>(sampling.per_slowest_period),
                                         std::ceil(sampling.per_fastest_period * fastest / slowest));
  std::size_t samples = wanted >= static_cast<double>(sampling.max_samples)
                            ? sampling.max_samples
                            : static_cast<std::size_t>(wanted);
  result.capped = wanted > static_cast<double>(sampling.max_samples);
  samples += samples % 2;  // puts a sample on the half period
  result.samples = samples;

  const MeanSignal signal = expand_mean(decomp, c, rel);
  const double constant = signal.constant;
  const std::vector<double>& coeff = signal.coeff;
  const std::vector<double>& freq = signal.freq;

  const double dt = result.window / static_cast<double>(samples);
  const std::size_t terms = coeff.size();
  std::vector<Complex> rotor(terms);
  std::vector<Complex> step(terms);
  for (std::size_t m = 0; m < terms; ++m) step[m] = std::polar(1.0, freq[m] * dt);

  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < samples; ++i) {
    const double t = static_cast<double>(i) * dt;
    if (i % kReseedInterval == 0) {
      for (std::size_t m = 0; m < terms; ++m) rotor[m] = std::polar(1.0, freq[m] * t);
    }
    double value = constant;
    for (std::size_t m = 0; m < terms; ++m) {
      value += coeff[m] * rotor[m].real();
      rotor[m] *= step[m];
    }
    if (value > best) {
      best = value;
      result.time_of_max = t;
    }
  }
  result.amplitude = std::max(0.0, best);
  return result;
}

AmplitudeResult tunneling_amplitude(const ModelParams& params, const AmplitudeSampling& sampling) {
  return tunneling_amplitude(eigendecompose(params, Precision::kAuto), sampling);
}

std::optional<double> dominant_frequency(const SpectralDecomposition& decomp) {
  const std::vector<double> c = initial_overlaps(decomp);
  const MeanSignal signal = expand_mean(decomp, c, energies_relative_to(decomp, heaviest(c)));
  if (signal.coeff.empty()) return std::nullopt;
  std::size_t best = 0;
  for (std::size_t m = 1; m < signal.coeff.size(); ++m) {
    if (std::fabs(signal.coeff[m]) > std::fabs(signal.coeff[best])) best = m;
  }
  return std::fabs(signal.freq[best]);
}

// ---------------------------------------------------------------------------

std::optional<int> resonance_order(const ModelParams& params) {
  if (params.tilt == 0.0) return 0;
  if (params.interaction == 0.0) return std::nullopt;
  const double x = params.tilt / (2.0 * params.interaction);
  const double p = std::round(x);
  if (std::fabs(x - p) > 1e-9 * std::max(1.0, std::fabs(x))) return std::nullopt;
  if (p < 0 || p >= params.n_atoms) return std::nullopt;
  return static_cast<int>(p);
}

PeriodEstimate tunneling_period(const ModelParams& params) {
  params.validate();
  PeriodEstimate estimate;
  estimate.regime = classify_regime(params.n_atoms, params.hopping, params.interaction);
  estimate.resonance_order = resonance_order(params);
  const LogScalar two_pi = LogScalar::from_double(kTwoPi);

  if (params.interaction == 0.0) {
    const AmplitudeFrequency af = tilted_amplitude_frequency(params.n_atoms, params.hopping, params.tilt);
    if (af.frequency) {
      estimate.analytic_cross_check = true;
      estimate.analytic_period = two_pi / LogScalar::from_double(*af.frequency);
    }
  } else if (estimate.regime.kind == RegimeTag::Kind::kFock && estimate.resonance_order &&
             params.hopping > 0.0) {
    estimate.analytic_cross_check = true;
    estimate.analytic_period =
        resonance_period(params.n_atoms, *estimate.resonance_order, estimate.regime.zeta, params.interaction);
  }

  // Skip ED outright when even quad precision cannot see the predicted gap.
  if (estimate.analytic_period && estimate.analytic_cross_check && params.interaction != 0.0) {
    const LogScalar predicted_gap = two_pi / *estimate.analytic_period;
    const double floor = resolution_floor(Precision::kExtended, build_hamiltonian(params).max_abs());
    if (predicted_gap < LogScalar::from_double(floor)) {
      estimate.period = *estimate.analytic_period;
      estimate.provenance = Provenance::kPerturbative;
      return estimate;
    }
  }

  const SpectralDecomposition decomp = eigendecompose(params, Precision::kAuto);
  double gap = splitting_top_pair(decomp);
  if (estimate.resonance_order && *estimate.resonance_order > 0) {
    if (auto pair = near_degenerate_pair_at_resonance(decomp, *estimate.resonance_order)) gap = pair->gap;
  }

  if ((gap > 0.0 && decomp.resolves(gap)) || !estimate.analytic_period) {
    estimate.splitting = gap;
    estimate.period = gap > 0.0 ? two_pi / LogScalar::from_double(gap) : LogScalar();
    estimate.provenance = Provenance::kExactDiagonalization;
  } else {
    estimate.period = *estimate.analytic_period;
    estimate.provenance = Provenance::kPerturbative;
  }
  return estimate;
}

// ---------------------------------------------------------------------------

std::optional<double> fitted_frequency(std::span<const double> times, std::span<const double> values) {
  if (times.size() != values.size()) throw std::invalid_argument("fitted_frequency: size mismatch");
  if (values.size() < 3) return std::nullopt;
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  const double mid = 0.5 * (*lo + *hi);

  std::vector<double> peaks;
  for (std::size_t i = 1; i + 1 < values.size(); ++i) {
    if (!(values[i] > values[i - 1] && values[i] >= values[i + 1] && values[i] >= mid)) continue;
    const double curvature = values[i - 1] - 2.0 * values[i] + values[i + 1];
    double offset = 0.0;
    if (curvature < 0.0) offset = 0.5 * (values[i - 1] - values[i + 1]) / curvature;
    const double h = offset >= 0.0 ? times[i + 1] - times[i] : times[i] - times[i - 1];
    peaks.push_back(times[i] + offset * h);
  }
  if (peaks.size() < 2) return std::nullopt;

  // least-squares slope of peak time against peak index
  const double count = static_cast<double>(peaks.size());
  double sum_k = 0.0, sum_t = 0.0, sum_kk = 0.0, sum_kt = 0.0;
  for (std::size_t k = 0; k < peaks.size(); ++k) {
    const double kk = static_cast<double>(k);
    sum_k += kk;
    sum_t += peaks[k];
    sum_kk += kk * kk;
    sum_kt += kk * peaks[k];
  }
  const double period = (count * sum_kt - sum_k * sum_t) / (count * sum_kk - sum_k * sum_k);
  if (!(period > 0.0)) return std::nullopt;
  return kTwoPi / period;
}

}  // namespace dwt
