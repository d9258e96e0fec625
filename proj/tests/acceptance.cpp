// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "dwt/analytic.hpp"
#include "dwt/dynamics.hpp"
#include "dwt/entanglement.hpp"
#include "dwt/fixtures.hpp"
#include "dwt/scan.hpp"
#include "dwt/spectrum.hpp"
#include "dwt/units.hpp"
#include "dwt/validation.hpp"

using namespace dwt;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) passed = false;
    if (!detail.empty()) detail += "; ";
    detail += what + (ok ? "" : " [x]");
  }
};

std::string fmt(const char* f, double a) {
  char buf[96];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

std::string fmt(const char* f, double a, double b) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

ModelParams make(int n, double j, double u, double dv) {
  ModelParams p;
  p.n_atoms = n;
  p.hopping = j;
  p.interaction = u;
  p.tilt = dv;
  return p;
}

bool within_rel(double got, double want, double rel) { return std::fabs(got - want) <= rel * std::fabs(want); }

Outcome noninteracting_exactness() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (int n : {1, 10, 50}) {
    const double t_period = kPi;  // J = 1
    const auto grid = linear_grid(0.0, 2.0 * t_period, 2001);
    const TimeSeries ts = trajectory(make(n, 1.0, 0.0, 0.0), initial_state_all_right(n), grid);
    for (std::size_t i = 0; i < ts.size(); ++i) {
      worst = std::max(worst, std::fabs(ts.distribution[i][0] - std::pow(std::cos(ts.times[i]), 2 * n)));
    }
  }
  const double elapsed = seconds_since(t0);
  o.require(worst <= 1e-10, fmt("max |P0 - cos^2N| = %.3g", worst));
  o.require(elapsed < 1.0, fmt("runtime %.3f s", elapsed));
  return o;
}

Outcome tilted_noninteracting() {
  Outcome o;
  namespace f1 = fixtures::figure1;
  const ModelParams p = make(f1::kAtoms, f1::kHopping, 0.0, f1::kTiltOverJ * f1::kHopping);
  const SpectralDecomposition d = eigendecompose(p, Precision::kAuto);
  const double amplitude = tunneling_amplitude(d).amplitude;
  o.require(std::fabs(amplitude - 50.0) <= 0.5, fmt("amplitude %.6g (50 +- 0.5)", amplitude));
  const auto grid = linear_grid(0.0, f1::kTMax, f1::kTSteps);
  const TimeSeries ts = trajectory(d, initial_state_all_right(f1::kAtoms), grid);
  const auto freq = fitted_frequency(ts.times, ts.mean);
  const double want = 2.0 * std::sqrt(2.0);
  o.require(freq && within_rel(*freq, want, 1e-3), fmt("fitted frequency %.8g vs %.8g", freq.value_or(0.0), want));
  const double dv = 1.05 * 2.0 * std::sqrt(f1::kAtoms - 1.0);
  const double suppressed = tunneling_amplitude(make(f1::kAtoms, 1.0, 0.0, dv)).amplitude;
  o.require(suppressed < 1.0, fmt("amplitude %.4g at 1.05 x threshold", suppressed));
  return o;
}

Outcome josephson_modulation() {
  Outcome o;
  const int n = fixtures::figure2::kAtoms;
  const ModelParams p = make(n, fixtures::figure2::kZetaOverN * n, 1.0, 0.0);
  const SpectralDecomposition d = eigendecompose(p, Precision::kAuto);
  const auto grid = linear_grid(0.0, 3.0 * kPi / p.hopping, 3001);
  const TimeSeries ts = trajectory(d, initial_state_all_right(n), grid);
  double sum = 0.0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const double e = ts.mean[i] - josephson_mean(n, p.hopping, 1.0, ts.times[i]);
    sum += e * e;
  }
  const double rms = std::sqrt(sum / static_cast<double>(ts.size())) / n;
  o.require(rms <= 0.02, fmt("RMS / N = %.4g over [0, 3T], T = pi/J", rms));
  const EnvelopeTimes env = half_time_and_revival(n, 1.0);
  const auto long_grid = linear_grid(0.0, 1.5 * env.revival_period, 20001);
  const TimeSeries slow = trajectory(d, initial_state_all_right(n), long_grid);
  const double found =
      locate_revival(slow.times, slow.mean, 0.5 * n, 2.0 * *env.half_time, 1.5 * env.revival_period);
  o.require(std::fabs(found - env.revival_period) <= *env.half_time,
            fmt("revival at %.6g vs pi/U, T_half = %.4g", found, *env.half_time));
  return o;
}

Outcome perturbative_splittings() {
  Outcome o;
  double worst_sym = 0.0;
  double worst_res = 0.0;
  bool all_pairs = true;
  for (double zeta : {0.05, 0.1}) {
    for (int n = 1; n <= 10; ++n) {
      const double ed = splitting_top_pair(eigendecompose(make(n, zeta, 1.0, 0.0), Precision::kAuto));
      const double pt = splitting_symmetric(n, zeta, 1.0).to_double();
      worst_sym = std::max(worst_sym, std::fabs(ed - pt) / pt / (3.0 * zeta * zeta));
      for (int q = 1; q <= n - 2; ++q) {
        const auto pair =
            near_degenerate_pair_at_resonance(eigendecompose(make(n, zeta, 1.0, 2.0 * q), Precision::kAuto), q);
        if (!pair) {
          all_pairs = false;
          continue;
        }
        const double pr = splitting_resonance(n, q, zeta, 1.0).to_double();
        worst_res = std::max(worst_res, std::fabs(pair->gap - pr) / pr);
      }
    }
  }
  o.require(worst_sym <= 1.0, fmt("symmetric: worst rel err / 3 zeta^2 = %.4g", worst_sym));
  o.require(all_pairs, "resonant pair found for every p <= N-2");
  o.require(worst_res <= 0.10, fmt("resonant: worst rel err = %.4g", worst_res));
  return o;
}

Outcome worked_example() {
  Outcome o;
  namespace rb = fixtures::rb87;
  const auto t0 = std::chrono::steady_clock::now();
  const LogScalar ms = LogScalar::from_double(PhysicalUnits::ms_per_natural_time());
  auto period = [&](int n, int p) { return resonance_period(n, p, rb::kZeta, rb::kInteractionNanoKelvin) * ms; };
  auto window = [&](int p) { return suppression_window(rb::kAtoms, p, rb::kZeta, rb::kInteractionNanoKelvin); };

  const struct {
    int n, p;
    double want, rel;
  } periods[] = {{1, 0, 466, 0.02}, {2, 0, 4840, 0.02}, {3, 0, 134000, 0.02},
                 {200, 197, 117, 0.05}, {200, 198, 34.3, 0.05}, {200, 199, 33.0, 0.05}};
  for (const auto& c : periods) {
    const double got = period(c.n, c.p).to_double();
    o.require(within_rel(got, c.want, c.rel),
              "T(" + std::to_string(c.n) + "," + std::to_string(c.p) + ")" + fmt("=%.5g ms", got));
  }
  const double tilts[] = {210, 211, 212};
  const double windows[] = {0.273, 1.40, 2.90};
  for (int k = 0; k < 3; ++k) {
    const int p = 197 + k;
    const double dv = resonance_tilt(p, rb::kInteractionNanoKelvin);
    const double w = window(p).to_double();
    o.require(within_rel(dv, tilts[k], 0.01), "dV(" + std::to_string(p) + ")" + fmt("=%.5g nK", dv));
    o.require(within_rel(w, windows[k], 0.05), "window(" + std::to_string(p) + ")" + fmt("=%.4g nK", w));
  }
  const double log_t = period(rb::kAtoms, 0).log10_magnitude();
  const double log_w = window(0).log10_magnitude();
  o.require(std::fabs(log_t - 635.06) <= 0.1, fmt("log10 T_200 = %.4f", log_t));
  o.require(std::fabs(log_w + 635.4) <= 0.2, fmt("log10 window = %.4f", log_w));
  const double elapsed = seconds_since(t0);
  o.require(elapsed < 1.0, fmt("runtime %.2g s", elapsed));
  return o;
}

Outcome resonance_scan() {
  Outcome o;
  namespace f3 = fixtures::figure3;
  const ModelParams p = make(f3::kSweepAtoms, f3::kZeta, 1.0, 0.0);
  const auto grid = linear_grid(0.0, 2.0 * f3::kSweepTiltOver2UMax, f3::kSweepPoints);
  const SweepResult sweep = tilt_sweep(p, grid);
  const auto found = detect_resonances(sweep, 1.0);
  for (int q = 1; q <= f3::kSweepAtoms - 1; ++q) {
    const auto it = std::find_if(found.begin(), found.end(), [q](const DetectedResonance& r) { return r.p == q; });
    if (it == found.end()) {
      o.require(false, "p=" + std::to_string(q) + " not detected");
      continue;
    }
    const double want = f3::kSweepAtoms - q;
    o.require(it->offset <= it->local_step && std::fabs(it->amplitude - want) <= 0.3,
              "p=" + std::to_string(q) + fmt(" offset %.2g, amplitude %.4g", it->offset, it->amplitude));
  }
  const double log_tau = std::fabs(log_tau_exact(7, 2, f3::kZeta) / std::numbers::ln10);
  o.require(std::fabs(log_tau - 5.0) <= 1.0, fmt("|log10 tau(7,2)| = %.4g", log_tau));
  return o;
}

Outcome entanglement_maxima() {
  Outcome o;
  const ModelParams p = make(fixtures::figure3::kDensityAtoms, fixtures::figure3::kZeta, 1.0, 0.0);
  const EntanglementReport quarter = report_at_quarter_period(p);
  o.require(std::fabs(quarter.q_measure - 0.4375) <= 1e-3, fmt("Q(T/4) = %.6f (0.4375)", quarter.q_measure));
  const double s_ideal = std::log(2.0) / std::log(8.0);
  o.require(std::fabs(quarter.entropy - s_ideal) <= 1e-3, fmt("S(T/4) = %.6f (%.6f)", quarter.entropy, s_ideal));
  o.require(quarter.schmidt_rank == 2, "k(T/4) = " + std::to_string(quarter.schmidt_rank));
  const double c = quarter.mss ? quarter.mss->c_max : 0.0;
  o.require(std::fabs(c - 7.0) <= 1e-9, fmt("C(T/4) = %.4g", c));
  const double zeta = fixtures::figure3::kZeta;
  const EntanglementReport half = report_at_period_fraction(p, 0.5);
  o.require(half.schmidt_rank == 1, "k(T/2) = " + std::to_string(half.schmidt_rank));
  o.require(half.q_measure <= 5.0 * zeta * zeta, fmt("Q(T/2) = %.3g", half.q_measure));
  return o;
}

Outcome stirling_check() {
  Outcome o;
  const double zeta = fixtures::figure4::kZeta;
  for (int q : fixtures::figure4::kNoonSizes) {
    double worst = 0.0;
    for (int n = 5 * q; n <= 10 * q; ++n) {
      const double exact = log_tau_exact(n, n - q, zeta);
      worst = std::max(worst, std::fabs(log_tau_stirling(n, q, zeta).log_tau - exact) / std::fabs(exact));
    }
    o.require(worst <= 0.02, "p'=" + std::to_string(q) + fmt(" worst %.3g", worst));
  }
  return o;
}

double energy_of(const TridiagonalMatrix& h, const StateVector& psi) {
  const auto hpsi = h.apply(psi.amplitudes());
  Complex e = 0.0;
  for (std::size_t i = 0; i < psi.size(); ++i) e += std::conj(psi[i]) * hpsi[i];
  return e.real();
}

Outcome property_suite() {
  Outcome o;
  constexpr int kCases = 200;
  std::mt19937_64 rng(20240611ULL);
  std::uniform_int_distribution<int> atoms(1, 12);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  double norm = 0.0, energy = 0.0, mirror = 0.0, binomial = 0.0, ortho = 0.0, rebuild = 0.0;
  bool measures_in_range = true;
  for (int c = 0; c < kCases; ++c) {
    const int n = atoms(rng);
    const ModelParams p = make(n, 0.05 + 2.0 * u01(rng), 2.0 * u01(rng) - 1.0, 4.0 * u01(rng) - 2.0);
    const double t = std::pow(10.0, 4.0 * u01(rng) - 1.0);
    const TridiagonalMatrix h = build_hamiltonian(p);
    const SpectralDecomposition d = eigendecompose(p, Precision::kAuto);
    const StateVector psi0 = initial_state_all_right(n);
    const StateVector psi = evolve(d, psi0, t);
    norm = std::max(norm, std::fabs(1.0 - psi.norm_squared()));
    energy = std::max(energy, std::fabs(energy_of(h, psi) - energy_of(h, psi0)) / h.max_abs());
    const double q = q_measure(psi);
    const double s = entropy(psi);
    measures_in_range = measures_in_range && q >= -1e-15 && q <= 1.0 + 1e-12 && s >= -1e-15 && s <= 1.0 + 1e-12;

    const auto dense = h.to_dense();
    const std::size_t dim = d.dimension();
    for (std::size_t a = 0; a < dim; ++a) {
      for (std::size_t b = 0; b < dim; ++b) {
        double dot = 0.0, rebuilt = 0.0;
        for (std::size_t i = 0; i < dim; ++i) {
          dot += d.component(i, a) * d.component(i, b);
          rebuilt += d.component(a, i) * d.eigenvalue(i) * d.component(b, i);
        }
        ortho = std::max(ortho, std::fabs(dot - (a == b ? 1.0 : 0.0)));
        rebuild = std::max(rebuild, std::fabs(rebuilt - dense[a * dim + b]) / h.max_abs());
      }
    }

    ModelParams sym = p;
    sym.tilt = 0.0;
    const SpectralDecomposition ds = eigendecompose(sym, Precision::kAuto);
    const Observables right = observables(evolve(ds, StateVector::fock(n, 0), t));
    const Observables left = observables(evolve(ds, StateVector::fock(n, n), t));
    for (int k = 0; k <= n; ++k) {
      mirror = std::max(mirror, std::fabs(right.probabilities[static_cast<std::size_t>(k)] -
                                          left.probabilities[static_cast<std::size_t>(n - k)]));
    }

    ModelParams free = p;
    free.interaction = 0.0;
    const Observables ob = observables(evolve(eigendecompose(free, Precision::kAuto), psi0, t));
    const double x = ob.mean / n;
    for (int k = 0; k <= n; ++k) {
      const double b = std::exp(log_binomial(n, k)) * std::pow(x, k) * std::pow(1.0 - x, n - k);
      binomial = std::max(binomial, std::fabs(ob.probabilities[static_cast<std::size_t>(k)] - b));
    }
  }
  o.require(norm <= 1e-10, fmt("norm %.2g", norm));
  o.require(energy <= 1e-10, fmt("energy %.2g", energy));
  o.require(mirror <= 1e-10, fmt("mirror %.2g", mirror));
  o.require(binomial <= 1e-8, fmt("binomial %.2g", binomial));
  o.require(ortho <= 1e-12 && rebuild <= 1e-12, fmt("orthonormality %.2g, reconstruction %.2g", ortho, rebuild));
  o.require(measures_in_range, "Q, S in [0, 1]");
  o.detail = std::to_string(kCases) + " cases: " + o.detail;
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"noninteracting exactness", noninteracting_exactness},
      {"tilted noninteracting", tilted_noninteracting},
      {"Josephson modulation", josephson_modulation},
      {"perturbative splittings", perturbative_splittings},
      {"worked example", worked_example},
      {"resonance scan", resonance_scan},
      {"entanglement maxima", entanglement_maxima},
      {"Stirling check", stirling_check},
      {"property suite", property_suite},
  };
  int failed = 0;
  int id = 1;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.passed) ++failed;
    std::printf("%s #%d %s: %s\n", o.passed ? "PASS" : "FAIL", id++, name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
