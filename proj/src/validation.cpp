#include "dwt/validation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "dwt/analytic.hpp"
#include "dwt/dynamics.hpp"
#include "dwt/entanglement.hpp"
#include "dwt/model.hpp"
#include "dwt/spectrum.hpp"

namespace dwt {

namespace {

constexpr double kPi = std::numbers::pi;

struct Tally {
  double worst = 0.0;
  std::string where;
  void add(double error, const std::string& label) {
    if (!(error <= worst)) {  // NaN lands here too
      worst = error;
      where = label;
    }
  }
};

CheckResult make(std::string name, const Tally& t, double tolerance, double scale) {
  CheckResult r;
  r.name = std::move(name);
  r.error = t.worst;
  r.tolerance = tolerance * scale;
  r.passed = t.worst <= r.tolerance;
  r.detail = t.where;
  return r;
}

std::string label(int n, double zeta, int p = -1) {
  char buf[64];
  if (p >= 0) {
    std::snprintf(buf, sizeof buf, "N=%d zeta=%g p=%d", n, zeta, p);
  } else {
    std::snprintf(buf, sizeof buf, "N=%d zeta=%g", n, zeta);
  }
  return buf;
}

ModelParams fock_params(int n, double zeta, double tilt_over_u = 0.0) {
  ModelParams p;
  p.n_atoms = n;
  p.interaction = 1.0;
  p.hopping = zeta;
  p.tilt = tilt_over_u;
  return p;
}

double energy_of(const TridiagonalMatrix& h, const StateVector& psi) {
  const auto hpsi = h.apply(psi.amplitudes());
  Complex e = 0.0;
  for (std::size_t n = 0; n < psi.size(); ++n) e += std::conj(psi[n]) * hpsi[n];
  return e.real();
}

}  // namespace

double locate_revival(std::span<const double> times, std::span<const double> values, double centre,
                      double t_from, double t_to) {
  if (times.size() != values.size()) throw std::invalid_argument("locate_revival: size mismatch");
  double best = -1.0;
  double at = 0.0;
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (times[i] < t_from || times[i] > t_to) continue;
    const double d = std::fabs(values[i] - centre);
    if (d > best) {
      best = d;
      at = times[i];
    }
  }
  if (best < 0.0) throw std::invalid_argument("locate_revival: no samples in the search interval");
  return at;
}

std::vector<CheckResult> run_cross_validation(const CheckOptions& options) {
  const double s = options.strict ? 0.5 : 1.0;
  const int n_max = options.max_atoms;
  std::vector<CheckResult> out;

  {  // U = 0: equally spaced spectrum -2J(N/2 - m)
    Tally t;
    for (int n = 1; n <= std::max(20, n_max); ++n) {
      ModelParams p;
      p.n_atoms = n;
      p.hopping = 1.0;
      const SpectralDecomposition d = eigendecompose(build_hamiltonian(p));
      for (int m = 0; m <= n; ++m) {
        t.add(std::fabs(d.eigenvalue(static_cast<std::size_t>(m)) + 2.0 * (n / 2.0 - m)) / n, label(n, 0));
      }
    }
    out.push_back(make("noninteracting spectrum", t, 1e-12, s));
  }

  {  // U = 0: P_0(t) = cos^{2N}(Jt)
    Tally t;
    for (int n : {1, 5, 10, 50}) {
      ModelParams p;
      p.n_atoms = n;
      p.hopping = 1.0;
      const SpectralDecomposition d = eigendecompose(p, Precision::kDouble);
      const auto grid = linear_grid(0.0, 2.0 * kPi, 401);
      const TimeSeries ts = trajectory(d, initial_state_all_right(n), grid);
      for (std::size_t i = 0; i < ts.size(); ++i) {
        t.add(std::fabs(ts.distribution[i][0] - noninteracting_p0(n, 1.0, ts.times[i])), label(n, 0));
      }
    }
    out.push_back(make("noninteracting P_0(t)", t, 1e-10, s));
  }

  {  // U = 0 with tilt: amplitude N / [1 + (dV/2J)^2]
    Tally t;
    for (int n : {1, 4, 10}) {
      for (double x : {0.0, 0.5, 1.0, 2.0, 3.0}) {
        ModelParams p;
        p.n_atoms = n;
        p.hopping = 1.0;
        p.tilt = 2.0 * x;
        const double expected = tilted_amplitude_frequency(n, 1.0, p.tilt).amplitude;
        const double got = tunneling_amplitude(p).amplitude;
        t.add(std::fabs(got - expected) / expected, label(n, 0) + " dV/2J=" + std::to_string(x));
      }
    }
    out.push_back(make("noninteracting amplitude", t, 1e-2, s));
  }

  {  // Fock regime, symmetric: top-pair splitting vs the perturbative formula
    Tally t;
    for (double zeta : {0.05, 0.1}) {
      for (int n = 1; n <= n_max; ++n) {
        const SpectralDecomposition d = eigendecompose(fock_params(n, zeta), Precision::kAuto);
        const double ed = splitting_top_pair(d);
        const double pt = splitting_symmetric(n, zeta, 1.0).to_double();
        // in units of 3 zeta^2
        t.add(std::fabs(ed - pt) / pt / (3.0 * zeta * zeta), label(n, zeta));
      }
    }
    out.push_back(make("symmetric splitting / 3 zeta^2", t, 1.0, s));
  }

  {  // resonances p <= N - 2
    Tally t;
    for (double zeta : {0.05, 0.1}) {
      for (int n = 2; n <= n_max; ++n) {
        for (int p = 1; p <= n - 2; ++p) {
          const SpectralDecomposition d = eigendecompose(fock_params(n, zeta, 2.0 * p), Precision::kAuto);
          const auto pair = near_degenerate_pair_at_resonance(d, p);
          if (!pair) {
            t.add(std::numeric_limits<double>::infinity(), label(n, zeta, p) + " no resonant pair");
            continue;
          }
          const double pt = splitting_resonance(n, p, zeta, 1.0).to_double();
          t.add(std::fabs(pair->gap - pt) / pt, label(n, zeta, p));
        }
      }
    }
    out.push_back(make("resonant splitting", t, 0.10, s));
  }

  {  // exact small cases
    Tally t;
    ModelParams one;
    one.n_atoms = 1;
    one.hopping = 0.7;
    one.interaction = 0.3;
    t.add(std::fabs(tunneling_period(one).period.to_double() - kPi / 0.7) / (kPi / 0.7), "N=1 T = pi/J");
    const double gap = splitting_top_pair(eigendecompose(fock_params(2, 0.1), Precision::kAuto));
    t.add(std::fabs(gap - (std::sqrt(1.04) - 1.0)) / (std::sqrt(1.04) - 1.0), "N=2 zeta=0.1 gap");
    out.push_back(make("closed-form small N", t, 1e-10, s));
  }

  {  // Josephson regime: modulated mean
    const int n = 10;
    ModelParams p;
    p.n_atoms = n;
    p.interaction = 1.0;
    p.hopping = 10.0 * n;
    // three bare tunneling periods pi / J
    const auto grid = linear_grid(0.0, 3.0 * kPi / p.hopping, 3001);
    const TimeSeries ts = trajectory(p, initial_state_all_right(n), grid);
    double sum = 0.0;
    for (std::size_t i = 0; i < ts.size(); ++i) {
      const double e = ts.mean[i] - josephson_mean(n, p.hopping, 1.0, ts.times[i]);
      sum += e * e;
    }
    Tally t;
    t.add(std::sqrt(sum / static_cast<double>(ts.size())) / n, "N=10 zeta/N=10 RMS / N");
    out.push_back(make("Josephson mean", t, 0.02, s));

    const EnvelopeTimes env = half_time_and_revival(n, 1.0);
    const auto long_grid = linear_grid(0.0, 1.5 * env.revival_period, 20001);
    const TimeSeries slow = trajectory(p, initial_state_all_right(n), long_grid);
    const double found =
        locate_revival(slow.times, slow.mean, 0.5 * n, 2.0 * *env.half_time, 1.5 * env.revival_period);
    Tally r;
    r.add(std::fabs(found - env.revival_period) / *env.half_time, "revival offset / T_half");
    out.push_back(make("Josephson revival", r, 1.0, s));
  }

  {  // Fock regime: two-level sloshing N sin^2(dE t / 2)
    Tally t;
    for (int n : {3, 5, 7}) {
      const double zeta = 0.1;
      const double de = splitting_symmetric(n, zeta, 1.0).to_double();
      const auto grid = linear_grid(0.0, 2.0 * kPi / de, 801);
      const TimeSeries ts = trajectory(fock_params(n, zeta), initial_state_all_right(n), grid);
      for (std::size_t i = 0; i < ts.size(); ++i) {
        const double model = n * std::pow(std::sin(0.5 * de * ts.times[i]), 2);
        t.add(std::fabs(ts.mean[i] - model) / n, label(n, zeta));
      }
    }
    out.push_back(make("Fock sloshing", t, 0.05, s));
  }

  {  // Fock regime at T/2: back to a near-Fock state
    Tally t;
    for (int n : {3, 5, 7}) {
      const double zeta = 0.1;
      const EntanglementReport rep = report_at_period_fraction(fock_params(n, zeta), 0.5);
      t.add(rep.q_measure / (5.0 * zeta * zeta), label(n, zeta) + " Q / 5 zeta^2");
      t.add(rep.schmidt_rank == 1 ? 0.0 : 2.0, label(n, zeta) + " k != 1");
    }
    out.push_back(make("half-period purity", t, 1.0, s));
  }

  {  // random cases: norm and energy conservation
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<int> atoms(1, std::min(12, std::max(1, n_max + 2)));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    Tally norm;
    Tally energy;
    for (unsigned c = 0; c < options.random_cases; ++c) {
      ModelParams p;
      p.n_atoms = atoms(rng);
      p.hopping = unit(rng) * 2.0;
      p.interaction = unit(rng) * 2.0 - 1.0;
      p.tilt = unit(rng) * 4.0 - 2.0;
      const TridiagonalMatrix h = build_hamiltonian(p);
      const SpectralDecomposition d = eigendecompose(p, Precision::kAuto);
      const StateVector psi0 = initial_state_all_right(p.n_atoms);
      const double e0 = energy_of(h, psi0);
      const double scale = std::max(h.max_abs(), 1e-300);
      for (double time : {0.37, 3.1, 41.0}) {
        const StateVector psi = evolve(d, psi0, time);
        norm.add(std::fabs(1.0 - psi.norm_squared()), "case " + std::to_string(c));
        energy.add(std::fabs(energy_of(h, psi) - e0) / scale, "case " + std::to_string(c));
      }
    }
    out.push_back(make("norm conservation", norm, 1e-10, s));
    out.push_back(make("energy conservation", energy, 1e-10, s));
  }

  return out;
}

std::string format_check_table(std::span<const CheckResult> results) {
  std::ostringstream os;
  char line[256];
  std::snprintf(line, sizeof line, "%-34s %-6s %12s %12s  %s\n", "check", "result", "error", "tolerance", "worst case");
  os << line;
  int failed = 0;
  for (const auto& r : results) {
    if (!r.passed) ++failed;
    std::snprintf(line, sizeof line, "%-34s %-6s %12.4g %12.4g  %s\n", r.name.c_str(), r.passed ? "PASS" : "FAIL",
                  r.error, r.tolerance, r.detail.c_str());
    os << line;
  }
  os << results.size() - static_cast<std::size_t>(failed) << "/" << results.size() << " checks passed\n";
  return os.str();
}

bool all_passed(std::span<const CheckResult> results) {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

}  // namespace dwt
