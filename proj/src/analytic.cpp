#include "dwt/analytic.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace dwt {

const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::kExact: return "exact";
    case Provenance::kPerturbative: return "perturbative";
    case Provenance::kStirling: return "stirling";
    case Provenance::kExactDiagonalization: return "ed";
  }
  return "unknown";
}

const char* to_string(RegimeTag::Kind kind) {
  switch (kind) {
    case RegimeTag::Kind::kJosephson: return "josephson";
    case RegimeTag::Kind::kFock: return "fock";
    case RegimeTag::Kind::kIntermediate: return "intermediate";
  }
  return "unknown";
}

RegimeTag classify_regime(int n_atoms, double hopping, double interaction) {
  if (n_atoms < 1) throw std::invalid_argument("classify_regime: N must be >= 1");
  RegimeTag tag;
  tag.zeta = interaction == 0.0 ? std::numeric_limits<double>::infinity() : hopping / std::fabs(interaction);
  if (tag.zeta <= kFockZetaMax) {
    tag.kind = RegimeTag::Kind::kFock;
  } else if (tag.zeta / n_atoms >= kJosephsonZetaOverNMin) {
    tag.kind = RegimeTag::Kind::kJosephson;
  } else {
    tag.kind = RegimeTag::Kind::kIntermediate;
  }
  return tag;
}

double noninteracting_p0(int n_atoms, double hopping, double t) {
  return std::pow(std::cos(hopping * t), 2 * n_atoms);
}

AmplitudeFrequency tilted_amplitude_frequency(int n_atoms, double hopping, double tilt) {
  AmplitudeFrequency r;
  if (hopping == 0.0) {
    r.amplitude = 0.0;  // nothing couples the wells
    return r;
  }
  const double x = tilt / (2.0 * hopping);
  r.amplitude = n_atoms / (1.0 + x * x);
  r.frequency = 2.0 * hopping * std::sqrt(1.0 + x * x);
  return r;
}

double suppression_threshold_noninteracting(int n_atoms, double hopping) {
  if (n_atoms < 1) throw std::invalid_argument("suppression threshold: N must be >= 1");
  return 2.0 * hopping * std::sqrt(static_cast<double>(n_atoms - 1));
}

double josephson_mean(int n_atoms, double hopping, double interaction, double t) {
  return 0.5 * n_atoms *
         (1.0 - std::cos(2.0 * hopping * t) * std::pow(std::cos(interaction * t), n_atoms - 1));
}

EnvelopeTimes half_time_and_revival(int n_atoms, double interaction) {
  if (interaction == 0.0) throw std::domain_error("half_time_and_revival: U must be nonzero");
  const double u = std::fabs(interaction);
  EnvelopeTimes r;
  r.revival_period = std::numbers::pi / u;
  if (n_atoms > 1) {
    r.half_time = std::acos(std::pow(2.0, -1.0 / (n_atoms - 1))) / u;
  }
  return r;
}

double log_binomial(int n, int k) {
  if (k < 0 || k > n) throw std::domain_error("log_binomial: need 0 <= k <= n");
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

LogScalar splitting_symmetric(int n_atoms, double zeta, double interaction) {
  return splitting_resonance(n_atoms, 0, zeta, interaction);
}

double resonance_tilt(int p, double interaction) { return 2.0 * p * interaction; }

LogScalar splitting_resonance(int n_atoms, int p, double zeta, double interaction) {
  if (p < 0 || p >= n_atoms) throw std::domain_error("splitting_resonance: need 0 <= p < N");
  if (!(zeta > 0.0) || interaction == 0.0) {
    throw std::domain_error("splitting_resonance: need zeta > 0 and U != 0");
  }
  const double m = n_atoms - p;  // atoms that tunnel
  double ln_value = std::log(4.0 * std::fabs(interaction)) + m * std::log(zeta / 2.0) + std::log(m) -
                    std::lgamma(m);
  if (p > 0) ln_value += 0.5 * log_binomial(n_atoms, p);
  return LogScalar::from_log(ln_value);
}

LogScalar suppression_window(int n_atoms, int p, double zeta, double interaction) {
  const LogScalar splitting = splitting_resonance(n_atoms, p, zeta, interaction);
  return splitting * LogScalar::from_double(2.0 / (n_atoms - p));
}

LogScalar resonance_period(int n_atoms, int p, double zeta, double interaction) {
  return LogScalar::from_double(2.0 * std::numbers::pi) / splitting_resonance(n_atoms, p, zeta, interaction);
}

double resonance_mean_occupation(int n_atoms, int p, double splitting, double t) {
  const double s = std::sin(0.5 * splitting * t);
  return (n_atoms - p) * s * s;
}

double log_tau_exact(int n_atoms, int p, double zeta) {
  return splitting_symmetric(n_atoms, zeta, 1.0).ln_magnitude() -
         splitting_resonance(n_atoms, p, zeta, 1.0).ln_magnitude();
}

StirlingEstimate log_tau_stirling(int n_atoms, int noon_size, double zeta) {
  if (noon_size < 1 || noon_size > n_atoms) {
    throw std::domain_error("log_tau_stirling: need 1 <= p' <= N");
  }
  const double n = n_atoms;
  const double q = noon_size;
  const double ln_n = std::log(n);
  StirlingEstimate r;
  r.log_tau = (-ln_n + 1.0 + std::log(zeta / 2.0)) * n +
              (q / (4.0 * n) + q * q / (12.0 * n * n) - 0.5 * ln_n) * q +
              (1.5 * std::log(q) - 1.5 + 0.5 * std::log(4.0) - std::log(zeta)) * q;
  r.in_domain = 5 * noon_size <= n_atoms;
  return r;
}

}  // namespace dwt
