#include "dwt/entanglement.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "dwt/analytic.hpp"
#include "dwt/dynamics.hpp"
#include "dwt/spectrum.hpp"

namespace dwt {

namespace {

std::vector<double> probabilities_of(const StateVector& psi) {
  std::vector<double> p(psi.size());
  for (std::size_t n = 0; n < psi.size(); ++n) p[n] = std::norm(psi[n]);
  return p;
}

int atoms_of(std::span<const double> probabilities) {
  if (probabilities.size() < 2) throw std::invalid_argument("entanglement: need N >= 1");
  return static_cast<int>(probabilities.size()) - 1;
}

}  // namespace

double q_measure(std::span<const double> probabilities, QNormalization norm) {
  const double n = atoms_of(probabilities);
  double purity = 0.0;
  for (double p : probabilities) purity += p * p;
  const double prefactor = norm == QNormalization::kLocalDimension ? (n + 1.0) / n : n / (n + 1.0);
  return prefactor * (1.0 - purity);
}

double q_measure(const StateVector& psi, QNormalization norm) { return q_measure(probabilities_of(psi), norm); }

double entropy(std::span<const double> probabilities) {
  const double base = std::log(static_cast<double>(probabilities.size()));
  atoms_of(probabilities);
  double s = 0.0;
  for (double p : probabilities) {
    if (p > 0.0) s -= p * std::log(p);
  }
  return s / base;
}

double entropy(const StateVector& psi) { return entropy(probabilities_of(psi)); }

int schmidt_rank(std::span<const double> probabilities, double threshold) {
  int k = 0;
  for (double p : probabilities) {
    if (p > threshold) ++k;
  }
  return k;
}

int schmidt_rank(const StateVector& psi, double threshold) { return schmidt_rank(probabilities_of(psi), threshold); }

std::optional<MssResult> mss_measure(std::span<const double> probabilities, const MssOptions& options) {
  const int n_total = atoms_of(probabilities);
  std::vector<int> branches;
  double joint = 0.0;
  for (int n = 0; n <= n_total; ++n) {
    if (probabilities[static_cast<std::size_t>(n)] >= options.branch_threshold) {
      branches.push_back(n);
      joint += probabilities[static_cast<std::size_t>(n)];
    }
  }
  if (branches.size() != 2 || joint < options.min_joint_weight) return std::nullopt;

  MssResult r;
  r.branch_low = branches[0];
  r.branch_high = branches[1];
  // Telling the branches apart in one well takes one more atom than the
  // smaller of the two occupations there.
  r.n_min_left = r.branch_low + 1;
  r.n_min_right = (n_total - r.branch_high) + 1;
  r.c_left = static_cast<double>(n_total) / r.n_min_left;
  r.c_right = static_cast<double>(n_total) / r.n_min_right;
  r.c_max = std::max(r.c_left, r.c_right);
  return r;
}

std::optional<MssResult> mss_measure(const StateVector& psi, const MssOptions& options) {
  return mss_measure(probabilities_of(psi), options);
}

std::string EntanglementReport::to_json() const {
  nlohmann::ordered_json doc;
  doc["time"] = time;
  doc["q_measure"] = q_measure;
  doc["entropy"] = entropy;
  doc["schmidt_rank"] = schmidt_rank;
  doc["schmidt_threshold"] = schmidt_threshold;
  doc["mss_applicable"] = mss.has_value();
  if (mss) {
    doc["mss_branch_low"] = mss->branch_low;
    doc["mss_branch_high"] = mss->branch_high;
    doc["mss_n_min_left"] = mss->n_min_left;
    doc["mss_n_min_right"] = mss->n_min_right;
    doc["mss_c_left"] = mss->c_left;
    doc["mss_c_right"] = mss->c_right;
    doc["mss_c_max"] = mss->c_max;
  }
  return doc.dump(2);
}

EntanglementReport entanglement_report(const StateVector& psi, double time, double schmidt_threshold,
                                       const EntanglementOptions& options) {
  const std::vector<double> p = probabilities_of(psi);
  EntanglementReport report;
  report.time = time;
  report.q_measure = q_measure(p, options.q_normalization);
  report.entropy = entropy(p);
  report.schmidt_threshold = options.schmidt_threshold.value_or(schmidt_threshold);
  report.schmidt_rank = schmidt_rank(p, report.schmidt_threshold);
  report.mss = mss_measure(p, options.mss);
  return report;
}

double report_schmidt_threshold(const ModelParams& params) {
  const RegimeTag regime = classify_regime(params.n_atoms, params.hopping, params.interaction);
  if (regime.kind == RegimeTag::Kind::kFock && regime.zeta > 0.0) return regime.zeta * regime.zeta;
  return kDefaultSchmidtThreshold;
}

EntanglementReport report_at_period_fraction(const ModelParams& params, double fraction,
                                             const EntanglementOptions& options) {
  const PeriodEstimate period = tunneling_period(params);
  const double t = fraction * period.period.to_double();
  const SpectralDecomposition decomp = eigendecompose(params, Precision::kAuto);
  const StateVector psi = evolve(decomp, initial_state_all_right(params.n_atoms), t);
  return entanglement_report(psi, t, report_schmidt_threshold(params), options);
}

EntanglementReport report_at_quarter_period(const ModelParams& params, const EntanglementOptions& options) {
  return report_at_period_fraction(params, 0.25, options);
}

}  // namespace dwt
