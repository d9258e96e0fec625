#include "dwt/model.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace dwt {

void ModelParams::validate() const {
  if (n_atoms < 1) throw std::invalid_argument("n_atoms must be >= 1");
  if (!std::isfinite(hopping) || !std::isfinite(interaction) || !std::isfinite(tilt)) {
    throw std::invalid_argument("hopping, interaction and tilt must be finite");
  }
  if (hopping < 0.0) throw std::invalid_argument("hopping must be >= 0");
  if (trap_frequency && !(*trap_frequency > 0.0 && std::isfinite(*trap_frequency))) {
    throw std::invalid_argument("trap_frequency must be positive");
  }
}

double ModelParams::zeta() const {
  if (interaction == 0.0) return std::numeric_limits<double>::infinity();
  return hopping / std::fabs(interaction);
}

std::optional<double> ModelParams::chi() const {
  if (!trap_frequency) return std::nullopt;
  const double n = n_atoms;
  return (n * n - 1.0) * interaction / (2.0 * *trap_frequency);
}

// ---------------------------------------------------------------------------

StateVector::StateVector(int n_atoms, std::vector<Complex> amplitudes)
    : n_atoms_(n_atoms), amplitudes_(std::move(amplitudes)) {
  if (n_atoms < 1) throw std::invalid_argument("StateVector: n_atoms must be >= 1");
  if (amplitudes_.size() != static_cast<std::size_t>(n_atoms) + 1) {
    throw std::invalid_argument("StateVector: expected N + 1 amplitudes");
  }
  if (std::fabs(norm_squared() - 1.0) > kNormalizationTolerance) {
    throw std::invalid_argument("StateVector: amplitudes are not normalized");
  }
}

StateVector StateVector::unchecked(int n_atoms, std::vector<Complex> amplitudes) {
  StateVector s;
  s.n_atoms_ = n_atoms;
  s.amplitudes_ = std::move(amplitudes);
  return s;
}

StateVector StateVector::fock(int n_atoms, int n_left) {
  if (n_atoms < 1 || n_left < 0 || n_left > n_atoms) {
    throw std::invalid_argument("StateVector::fock: need 0 <= n_left <= N, N >= 1");
  }
  std::vector<Complex> c(static_cast<std::size_t>(n_atoms) + 1);
  c[static_cast<std::size_t>(n_left)] = 1.0;
  return StateVector(n_atoms, std::move(c));
}

double StateVector::norm_squared() const {
  double s = 0.0;
  for (const Complex& c : amplitudes_) s += std::norm(c);
  return s;
}

StateVector StateVector::reflected() const {
  std::vector<Complex> c(amplitudes_.rbegin(), amplitudes_.rend());
  return unchecked(n_atoms_, std::move(c));
}

// ---------------------------------------------------------------------------

double TridiagonalMatrix::max_abs() const {
  double m = 0.0;
  for (double d : diagonal) m = std::max(m, std::fabs(d));
  for (double e : off_diagonal) m = std::max(m, std::fabs(e));
  return m;
}

std::vector<double> TridiagonalMatrix::to_dense() const {
  const std::size_t n = size();
  std::vector<double> a(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) a[i * n + i] = diagonal[i];
  for (std::size_t i = 0; i + 1 < n; ++i) {
    a[i * n + i + 1] = off_diagonal[i];
    a[(i + 1) * n + i] = off_diagonal[i];
  }
  return a;
}

std::vector<Complex> TridiagonalMatrix::apply(std::span<const Complex> x) const {
  const std::size_t n = size();
  if (x.size() != n) throw std::invalid_argument("TridiagonalMatrix::apply: size mismatch");
  std::vector<Complex> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    Complex acc = diagonal[i] * x[i];
    if (i > 0) acc += off_diagonal[i - 1] * x[i - 1];
    if (i + 1 < n) acc += off_diagonal[i] * x[i + 1];
    y[i] = acc;
  }
  return y;
}

TridiagonalMatrix build_hamiltonian(const ModelParams& params) {
  params.validate();
  const int n_total = params.n_atoms;
  const std::size_t dim = params.dimension();
  TridiagonalMatrix h;
  h.diagonal.resize(dim);
  h.off_diagonal.resize(dim - 1);
  for (int n = 0; n <= n_total; ++n) {
    const double left = n;
    const double right = n_total - n;
    h.diagonal[static_cast<std::size_t>(n)] =
        params.interaction * (left * (left - 1.0) + right * (right - 1.0)) + params.tilt * left;
    if (n < n_total) {
      h.off_diagonal[static_cast<std::size_t>(n)] =
          -params.hopping * std::sqrt((left + 1.0) * right);
    }
  }
  return h;
}

ValidityCheck validity_chi(const ModelParams& params) {
  params.validate();
  ValidityCheck check;
  check.chi = params.chi();
  if (!check.chi) return check;
  check.status = *check.chi <= 1.0 ? ValidityCheck::Status::kValid : ValidityCheck::Status::kInvalid;
  return check;
}

StateVector initial_state_all_right(int n_atoms) { return StateVector::fock(n_atoms, 0); }

// ---------------------------------------------------------------------------

const char* to_string(EnergyUnit unit) {
  return unit == EnergyUnit::kNanoKelvin ? "nK" : "natural";
}

ParameterSet parse_parameter_set(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("parameter file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("parameter file must be a JSON object");

  static const char* const kKnown[] = {"n_atoms", "hopping", "interaction",
                                       "tilt",    "trap_frequency", "unit"};
  for (const auto& item : doc.items()) {
    if (std::find_if(std::begin(kKnown), std::end(kKnown),
                     [&](const char* k) { return item.key() == k; }) == std::end(kKnown)) {
      throw std::invalid_argument("unknown parameter key: " + item.key());
    }
  }

  auto number = [&](const char* key, double fallback) {
    if (!doc.contains(key)) return fallback;
    if (!doc[key].is_number()) throw std::invalid_argument(std::string(key) + " must be a number");
    return doc[key].get<double>();
  };

  ParameterSet set;
  if (!doc.contains("n_atoms") || !doc["n_atoms"].is_number_integer()) {
    throw std::invalid_argument("n_atoms is required and must be an integer");
  }
  set.params.n_atoms = doc["n_atoms"].get<int>();
  set.params.hopping = number("hopping", 0.0);
  set.params.interaction = number("interaction", 0.0);
  set.params.tilt = number("tilt", 0.0);

  if (doc.contains("unit")) {
    const std::string unit = doc["unit"].is_string() ? doc["unit"].get<std::string>() : "";
    if (unit == "natural") {
      set.unit = EnergyUnit::kNatural;
    } else if (unit == "nK") {
      set.unit = EnergyUnit::kNanoKelvin;
    } else {
      throw std::invalid_argument("unit must be \"natural\" or \"nK\"");
    }
  }
  if (doc.contains("trap_frequency") && !doc["trap_frequency"].is_null()) {
    double omega = number("trap_frequency", 0.0);
    // nK files give omega in rad/s; store hbar * omega in nK
    if (set.unit == EnergyUnit::kNanoKelvin) omega = PhysicalUnits::energy_nK_from_angular_frequency(omega);
    set.params.trap_frequency = omega;
  }
  set.params.validate();
  return set;
}

ParameterSet load_parameter_set(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open parameter file: " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_parameter_set(text.str());
}

std::string to_json(const ParameterSet& set) {
  nlohmann::ordered_json doc;
  doc["n_atoms"] = set.params.n_atoms;
  doc["hopping"] = set.params.hopping;
  doc["interaction"] = set.params.interaction;
  doc["tilt"] = set.params.tilt;
  if (set.params.trap_frequency) {
    double omega = *set.params.trap_frequency;
    if (set.unit == EnergyUnit::kNanoKelvin) omega /= PhysicalUnits::energy_nK_from_angular_frequency(1.0);
    doc["trap_frequency"] = omega;
  }
  doc["unit"] = to_string(set.unit);
  return doc.dump(2);
}

}  // namespace dwt
