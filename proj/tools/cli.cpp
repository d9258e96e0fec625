#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dwt/analytic.hpp"
#include "dwt/csv.hpp"
#include "dwt/dynamics.hpp"
#include "dwt/entanglement.hpp"
#include "dwt/fixtures.hpp"
#include "dwt/model.hpp"
#include "dwt/scan.hpp"
#include "dwt/spectrum.hpp"
#include "dwt/units.hpp"
#include "dwt/validation.hpp"

namespace dwt::cli {

namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

constexpr double kPi = std::numbers::pi;

// Thrown for inconsistent flags; maps to kExitUsage.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

EnergyUnit parse_unit(const std::string& text) {
  if (text == "natural") return EnergyUnit::kNatural;
  if (text == "nK") return EnergyUnit::kNanoKelvin;
  throw UsageError("unknown unit '" + text + "' (natural | nK)");
}

std::string time_unit_name(EnergyUnit unit) { return unit == EnergyUnit::kNanoKelvin ? "ms" : "hbar/energy"; }

Json params_json(const ModelParams& p, EnergyUnit unit) {
  Json j;
  j["n_atoms"] = p.n_atoms;
  j["hopping"] = p.hopping;
  j["interaction"] = p.interaction;
  j["tilt"] = p.tilt;
  j["unit"] = to_string(unit);
  j["time_unit"] = time_unit_name(unit);
  return j;
}

Json log_scalar_json(const LogScalar& x) {
  Json j;
  j["log10"] = x.is_zero() ? Json(nullptr) : Json(x.log10_magnitude());
  if (x.is_zero() || std::fabs(x.ln_magnitude()) < kLogScalarDoubleLimit) {
    j["value"] = x.to_double();
  } else {
    j["value"] = nullptr;
  }
  j["text"] = x.to_string(6);
  return j;
}

std::string format_log_scalar(const LogScalar& x) {
  if (!x.is_zero() && std::fabs(x.log10_magnitude()) < 300) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6g", x.to_double());
    return buf;
  }
  return x.to_string(6);
}

std::string to_csv(const TimeSeries& ts, double time_factor) {
  std::ostringstream os;
  write_time_series_csv(os, ts, time_factor);
  return os.str();
}

std::string to_csv(const SweepResult& sweep) {
  std::ostringstream os;
  write_sweep_csv(os, sweep);
  return os.str();
}

// -- simulate ---------------------------------------------------------------

struct SimulateArgs {
  std::optional<int> n_atoms;
  std::optional<double> hopping;
  std::optional<double> interaction;
  std::optional<double> tilt;
  std::optional<double> zeta;
  std::optional<double> zeta_over_n;
  std::optional<double> tilt_over_j;
  std::optional<int> resonance_p;
  std::string params_file;
  std::string unit = "natural";
  std::optional<double> t_max;
  int t_steps = 401;
  std::string out;
  std::string report;
};

ParameterSet resolve_params(const SimulateArgs& a) {
  ParameterSet set;
  const bool model_flags = a.n_atoms || a.hopping || a.interaction || a.tilt || a.zeta || a.zeta_over_n ||
                           a.tilt_over_j || a.resonance_p;
  if (!a.params_file.empty()) {
    if (model_flags) throw UsageError("--params cannot be combined with model flags");
    set = load_parameter_set(a.params_file);
    set.params.validate();
    return set;
  }
  if (!a.n_atoms) throw UsageError("-N is required without --params");
  set.unit = parse_unit(a.unit);
  ModelParams& p = set.params;
  p.n_atoms = *a.n_atoms;
  if (p.n_atoms < 1) throw UsageError("-N must be >= 1");
  p.interaction = a.interaction.value_or(1.0);

  if (a.zeta && a.zeta_over_n) throw UsageError("--zeta and --zeta-over-N are exclusive");
  std::optional<double> zeta = a.zeta;
  if (a.zeta_over_n) zeta = *a.zeta_over_n * p.n_atoms;
  if (zeta) {
    if (a.hopping) throw UsageError("-J cannot be combined with --zeta or --zeta-over-N");
    if (p.interaction == 0.0) throw UsageError("--zeta needs a nonzero -U");
    p.hopping = *zeta * std::fabs(p.interaction);
  } else {
    p.hopping = a.hopping.value_or(1.0);
  }

  const int tilt_flags = (a.tilt ? 1 : 0) + (a.tilt_over_j ? 1 : 0) + (a.resonance_p ? 1 : 0);
  if (tilt_flags > 1) throw UsageError("--tilt, --tilt-over-J and --resonance-p are exclusive");
  if (a.tilt) p.tilt = *a.tilt;
  if (a.tilt_over_j) p.tilt = *a.tilt_over_j * p.hopping;
  if (a.resonance_p) {
    if (*a.resonance_p < 0 || *a.resonance_p >= p.n_atoms) throw UsageError("--resonance-p must lie in [0, N)");
    if (p.interaction == 0.0) throw UsageError("--resonance-p needs a nonzero -U");
    p.tilt = resonance_tilt(*a.resonance_p, p.interaction);
  }
  try {
    p.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return set;
}

// Natural-unit default span: Josephson runs show three revivals, everything
// else one tunneling period.
double default_t_max(const ModelParams& p) {
  const RegimeTag regime = classify_regime(p.n_atoms, p.hopping, p.interaction);
  if (p.interaction != 0.0 && regime.kind == RegimeTag::Kind::kJosephson) {
    return 3.0 * half_time_and_revival(p.n_atoms, p.interaction).revival_period;
  }
  const LogScalar period = tunneling_period(p).period;
  if (period.is_zero() || period.ln_magnitude() > kLogScalarDoubleLimit) {
    throw UsageError("tunneling period " + period.to_string() + " is out of double range; pass --t-max");
  }
  return period.to_double();
}

Json quarter_period_json(const ModelParams& p, EnergyUnit unit) {
  const double scale = time_scale(unit);
  const PeriodEstimate period = tunneling_period(p);
  Json j;
  j["params"] = params_json(p, unit);
  Json per = log_scalar_json(period.period * LogScalar::from_double(scale));
  per["provenance"] = to_string(period.provenance);
  per["regime"] = to_string(period.regime.kind);
  per["zeta"] = period.regime.zeta;
  per["analytic_cross_check"] = period.analytic_cross_check;
  if (period.resonance_order) per["resonance_p"] = *period.resonance_order;
  j["period"] = per;
  const LogScalar quarter = period.period * LogScalar::from_double(0.25);
  if (period.period.is_zero() || quarter.ln_magnitude() > kLogScalarDoubleLimit - 1.0) {
    j["quarter_period_report"] = nullptr;
    return j;
  }
  EntanglementReport rep = report_at_quarter_period(p);
  rep.time *= scale;
  j["quarter_period_report"] = to_json(rep);
  return j;
}

int run_simulate(const SimulateArgs& a, std::ostream& out, std::ostream& err) {
  const ParameterSet set = resolve_params(a);
  const ModelParams& p = set.params;
  const double scale = time_scale(set.unit);
  if (a.t_steps < 2) throw UsageError("--t-steps must be >= 2");
  double t_max = a.t_max ? *a.t_max / scale : default_t_max(p);
  if (!(t_max > 0.0) || !std::isfinite(t_max)) throw UsageError("--t-max must be positive");

  const auto grid = linear_grid(0.0, t_max, static_cast<std::size_t>(a.t_steps));
  const TimeSeries ts = trajectory(p, initial_state_all_right(p.n_atoms), grid);
  const std::string csv = to_csv(ts, scale);
  const std::string report = quarter_period_json(p, set.unit).dump(2) + "\n";

  if (a.out.empty() || a.out == "-") {
    out << csv;
  } else {
    write_text_file(a.out, csv);
  }
  if (!a.report.empty()) {
    write_text_file(a.report, report);
  } else if (!a.out.empty() && a.out != "-") {
    out << report;
  } else {
    err << report;
  }
  return kExitOk;
}

// -- figure -----------------------------------------------------------------

struct FigureWriter {
  fs::path dir;
  Manifest manifest;

  void trajectory_file(const std::string& name, const std::string& description, const ModelParams& p,
                       double t_max, int steps) {
    const auto grid = linear_grid(0.0, t_max, static_cast<std::size_t>(steps));
    const TimeSeries ts = trajectory(p, initial_state_all_right(p.n_atoms), grid);
    write_text_file(dir / name, to_csv(ts, 1.0));
    Json side;
    side["kind"] = "trajectory";
    side["params"] = params_json(p, EnergyUnit::kNatural);
    side["t_min"] = 0.0;
    side["t_max"] = t_max;
    side["t_steps"] = steps;
    const std::string side_name = fs::path(name).replace_extension(".json").string();
    write_text_file(dir / side_name, side.dump(2) + "\n");
    ManifestEntry e{name, "trajectory", description, Json::object()};
    e.info["sidecar"] = side_name;
    e.info["time_range"] = {0.0, t_max};
    e.info["n_left_range"] = {0, p.n_atoms};
    e.info["time_unit"] = time_unit_name(EnergyUnit::kNatural);
    manifest.files.push_back(e);
  }

  void sweep_file(const std::string& name, const std::string& description, const SweepResult& sweep) {
    write_text_file(dir / name, to_csv(sweep));
    const std::string side_name = fs::path(name).replace_extension(".json").string();
    write_text_file(dir / side_name, sweep_sidecar(sweep).dump(2) + "\n");
    ManifestEntry e{name, "sweep", description, Json::object()};
    e.info["sidecar"] = side_name;
    e.info["axis"] = sweep.axis;
    e.info["quantity"] = sweep.quantity;
    e.info["series"] = sweep.series_labels();
    if (!sweep.grid.empty()) e.info["x_range"] = {sweep.grid.front(), sweep.grid.back()};
    manifest.files.push_back(e);
  }

  void table_file(const std::string& name, const std::string& description, const std::string& csv) {
    write_text_file(dir / name, csv);
    manifest.files.push_back({name, "table", description, Json::object()});
  }

  void finish() { write_text_file(dir / "manifest.json", manifest.to_json().dump(2) + "\n"); }
};

void figure1(FigureWriter& w) {
  namespace f = fixtures::figure1;
  ModelParams p;
  p.n_atoms = f::kAtoms;
  p.hopping = f::kHopping;
  p.tilt = f::kTiltOverJ * f::kHopping;
  w.manifest.parameters["density"] = params_json(p, EnergyUnit::kNatural);
  w.trajectory_file("fig1_density.csv", "P_{n_L}(t), mean and variance, U = 0, dV = 2J", p, f::kTMax, f::kTSteps);

  const auto tilts = linear_grid(0.0, f::kSweepTiltOverJMax * f::kHopping, f::kSweepPoints);
  TiltSweepOptions opt;
  opt.refine = false;
  opt.allow_large_n = true;
  opt.with_frequency = true;
  const SweepResult ed = tilt_sweep(p, tilts, opt);

  SweepResult amplitude = ed;
  SweepResult frequency = ed;
  amplitude.quantity = "amplitude";
  frequency.quantity = "frequency";
  for (auto& r : amplitude.records) {
    r.series = "ed";
    r.frequency.reset();
  }
  for (auto& r : frequency.records) {
    r.series = "ed";
    r.amplitude.reset();
  }
  for (double x : tilts) {
    const AmplitudeFrequency af = tilted_amplitude_frequency(p.n_atoms, p.hopping, x);
    SweepRecord r;
    r.series = "analytic";
    r.x = x;
    r.provenance = Provenance::kExact;
    r.amplitude = af.amplitude;
    amplitude.records.push_back(r);
    r.amplitude.reset();
    r.frequency = af.frequency;
    frequency.records.push_back(r);
  }
  const double threshold = suppression_threshold_noninteracting(p.n_atoms, p.hopping);
  amplitude.metadata["suppression_threshold"] = threshold;
  w.manifest.parameters["suppression_threshold"] = threshold;
  w.sweep_file("fig1_amplitude.csv", "tunneling amplitude against tilt, ED and analytic", amplitude);
  w.sweep_file("fig1_frequency.csv", "oscillation frequency against tilt, ED and analytic", frequency);
}

void figure2(FigureWriter& w) {
  namespace f = fixtures::figure2;
  ModelParams p;
  p.n_atoms = f::kAtoms;
  p.interaction = 1.0;
  p.hopping = f::kZetaOverN * f::kAtoms;
  w.manifest.parameters["density"] = params_json(p, EnergyUnit::kNatural);
  const EnvelopeTimes env = half_time_and_revival(p.n_atoms, p.interaction);
  const double t_max = f::kRevivals * env.revival_period;
  w.trajectory_file("fig2_density.csv", "P_{n_L}(t), mean and variance, Josephson regime", p, t_max, f::kTSteps);

  std::ostringstream os;
  os << "time,josephson_mean,envelope_upper,envelope_lower\r\n";
  for (double t : linear_grid(0.0, t_max, static_cast<std::size_t>(f::kTSteps))) {
    const double envelope = 0.5 * p.n_atoms * std::pow(std::cos(p.interaction * t), p.n_atoms - 1);
    os << format_number(t) << ',' << format_number(josephson_mean(p.n_atoms, p.hopping, p.interaction, t)) << ','
       << format_number(0.5 * p.n_atoms + std::fabs(envelope)) << ','
       << format_number(0.5 * p.n_atoms - std::fabs(envelope)) << "\r\n";
  }
  w.table_file("fig2_analytic.csv", "lowest-order mean occupation and its envelope", os.str());
  w.manifest.parameters["revival_period"] = env.revival_period;
  if (env.half_time) w.manifest.parameters["half_time"] = *env.half_time;
}

void figure3(FigureWriter& w) {
  namespace f = fixtures::figure3;
  ModelParams sym;
  sym.n_atoms = f::kDensityAtoms;
  sym.interaction = 1.0;
  sym.hopping = f::kZeta;
  ModelParams res = sym;
  res.tilt = resonance_tilt(f::kResonanceOrder, sym.interaction);
  w.manifest.parameters["density_symmetric"] = params_json(sym, EnergyUnit::kNatural);
  w.manifest.parameters["density_resonant"] = params_json(res, EnergyUnit::kNatural);
  w.trajectory_file("fig3_density_symmetric.csv", "P_{n_L}(t) over one tunneling period, no tilt", sym,
                    f::kPeriods * tunneling_period(sym).period.to_double(), f::kTSteps);
  w.trajectory_file("fig3_density_resonant.csv", "P_{n_L}(t) over one period on the p = 2 resonance", res,
                    f::kPeriods * tunneling_period(res).period.to_double(), f::kTSteps);

  ModelParams sweep_params;
  sweep_params.n_atoms = f::kSweepAtoms;
  sweep_params.interaction = 1.0;
  sweep_params.hopping = f::kZeta;
  const auto tilts = linear_grid(0.0, 2.0 * sweep_params.interaction * f::kSweepTiltOver2UMax, f::kSweepPoints);
  const SweepResult sweep = tilt_sweep(sweep_params, tilts);
  w.manifest.parameters["amplitude_sweep"] = params_json(sweep_params, EnergyUnit::kNatural);
  w.sweep_file("fig3_amplitude.csv", "tunneling amplitude against tilt with refinement at every 2pU", sweep);

  const TiltSweepOptions defaults;
  const double centre = resonance_tilt(f::kZoomOrder, sweep_params.interaction);
  const double half_span = defaults.refine_windows *
                           suppression_window(sweep_params.n_atoms, f::kZoomOrder, f::kZeta, 1.0).to_double();
  SweepResult zoom = sweep;
  zoom.records.clear();
  zoom.grid.clear();
  for (const auto& r : sweep.records) {
    if (std::fabs(r.x - centre) <= half_span * (1.0 + 1e-12)) {
      zoom.records.push_back(r);
      zoom.grid.push_back(r.x);
    }
  }
  zoom.metadata["zoom_centre"] = centre;
  zoom.metadata["zoom_half_span"] = half_span;
  w.sweep_file("fig3_zoom.csv", "amplitude around dV = 4U", zoom);

  Json peaks = Json::array();
  for (const auto& d : detect_resonances(sweep, sweep_params.interaction)) {
    peaks.push_back({{"p", d.p}, {"tilt_peak", d.tilt_peak}, {"amplitude", d.amplitude}, {"offset", d.offset},
                     {"width", d.width}});
  }
  w.manifest.parameters["detected_resonances"] = peaks;
}

void figure4(FigureWriter& w) {
  namespace f = fixtures::figure4;
  const SweepResult tau = tau_vs_n(f::kZeta, f::kNoonSizes, f::kMaxMultiple);
  w.manifest.parameters["zeta"] = f::kZeta;
  w.manifest.parameters["noon_sizes"] = f::kNoonSizes;
  w.sweep_file("fig4_tau.csv", "tau against N, exact and Stirling, per NOON size", tau);
}

void figure5(FigureWriter& w) {
  namespace f = fixtures::figure5;
  w.manifest.parameters["zeta"] = f::kZeta;
  w.sweep_file("fig5_period_vs_n.csv", "symmetric tunneling period against N",
               period_vs_n(f::kZeta, f::kFirstAtoms, f::kLastAtoms, 1.0));
  w.sweep_file("fig5_period_vs_p.csv", "resonant tunneling period against p, one series per N",
               period_vs_p(f::kZeta, f::kResonanceAtoms, 1.0));
}

int run_figure(int id, const std::string& out_dir, std::ostream& out) {
  FigureWriter w;
  w.dir = out_dir.empty() ? fs::path("figure" + std::to_string(id)) : fs::path(out_dir);
  w.manifest.command = "figure " + std::to_string(id);
  w.manifest.parameters["figure"] = id;
  switch (id) {
    case 1: figure1(w); break;
    case 2: figure2(w); break;
    case 3: figure3(w); break;
    case 4: figure4(w); break;
    case 5: figure5(w); break;
    default: throw UsageError("figure id must be 1..5");
  }
  w.finish();
  for (const auto& e : w.manifest.files) out << (w.dir / e.file).string() << "\n";
  out << (w.dir / "manifest.json").string() << "\n";
  return kExitOk;
}

// -- design -----------------------------------------------------------------

struct DesignArgs {
  int n_atoms = fixtures::rb87::kAtoms;
  int noon_size = fixtures::rb87::kNoonSize;
  double zeta = fixtures::rb87::kZeta;
  std::optional<double> interaction;
  std::string unit = "nK";
  bool json = false;
};

int run_design(const DesignArgs& a, std::ostream& out) {
  const EnergyUnit unit = parse_unit(a.unit);
  if (a.n_atoms < 1) throw UsageError("--n-atoms must be >= 1");
  if (a.noon_size < 1 || a.noon_size > a.n_atoms) throw UsageError("--noon-size must lie in [1, N]");
  if (!(a.zeta > 0.0)) throw UsageError("--zeta must be positive");
  const double u = a.interaction.value_or(unit == EnergyUnit::kNanoKelvin ? fixtures::rb87::kInteractionNanoKelvin
                                                                           : 1.0);
  if (!(u > 0.0)) throw UsageError("--interaction must be positive");
  const int n = a.n_atoms;
  const int p = n - a.noon_size;
  const LogScalar scale = LogScalar::from_double(time_scale(unit));
  const LogScalar splitting = splitting_resonance(n, p, a.zeta, u);
  const LogScalar period = resonance_period(n, p, a.zeta, u) * scale;
  const LogScalar ms_time = period * LogScalar::from_double(0.25);
  const LogScalar window = suppression_window(n, p, a.zeta, u);
  const double tilt = resonance_tilt(p, u);
  const double c_lower = static_cast<double>(n) / (p + 1);
  const double c_higher = n;

  const std::string e_unit = unit == EnergyUnit::kNanoKelvin ? "nK" : "energy";
  const std::string t_unit = time_unit_name(unit);
  if (a.json) {
    Json j;
    j["n_atoms"] = n;
    j["noon_size"] = a.noon_size;
    j["p"] = p;
    j["zeta"] = a.zeta;
    j["interaction"] = u;
    j["hopping"] = a.zeta * u;
    j["unit"] = to_string(unit);
    j["time_unit"] = t_unit;
    j["resonance_tilt"] = tilt;
    j["splitting"] = log_scalar_json(splitting);
    j["period"] = log_scalar_json(period);
    j["ms_time"] = log_scalar_json(ms_time);
    j["tilt_window"] = log_scalar_json(window);
    j["c_delta_lower_well"] = c_lower;
    j["c_delta_higher_well"] = c_higher;
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  char line[160];
  auto row = [&](const char* name, const std::string& value, const std::string& u_name) {
    std::snprintf(line, sizeof line, "%-26s %18s  %s\n", name, value.c_str(), u_name.c_str());
    out << line;
  };
  char buf[48];
  std::snprintf(buf, sizeof buf, "%d", n);
  row("atoms N", buf, "");
  std::snprintf(buf, sizeof buf, "%d", a.noon_size);
  row("NOON size p'", buf, "");
  std::snprintf(buf, sizeof buf, "%d", p);
  row("resonance order p", buf, "");
  std::snprintf(buf, sizeof buf, "%.6g", a.zeta);
  row("zeta", buf, "");
  std::snprintf(buf, sizeof buf, "%.6g", u);
  row("interaction U", buf, e_unit);
  std::snprintf(buf, sizeof buf, "%.6g", tilt);
  row("resonant tilt 2pU", buf, e_unit);
  row("splitting", format_log_scalar(splitting), e_unit);
  row("tunneling period", format_log_scalar(period), t_unit);
  row("MS state at T/4", format_log_scalar(ms_time), t_unit);
  row("tilt window", format_log_scalar(window), e_unit);
  std::snprintf(buf, sizeof buf, "%.6g", c_lower);
  row("C_delta lower well", buf, "");
  std::snprintf(buf, sizeof buf, "%.6g", c_higher);
  row("C_delta higher well", buf, "");
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bosons in a tilted double well: exact dynamics, resonances and entanglement"};
  app.require_subcommand(1);

  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "evolve |0,N> and write the trajectory CSV");
  simulate->add_option("-N,--n-atoms", sim.n_atoms, "number of atoms");
  simulate->add_option("-J,--hopping", sim.hopping, "hopping J (default 1)");
  simulate->add_option("-U,--interaction", sim.interaction, "interaction U (default 1)");
  simulate->add_option("--tilt", sim.tilt, "tilt dV");
  simulate->add_option("--zeta", sim.zeta, "J / |U|");
  simulate->add_option("--zeta-over-N", sim.zeta_over_n, "J / (|U| N)");
  simulate->add_option("--tilt-over-J", sim.tilt_over_j, "dV / J");
  simulate->add_option("--resonance-p", sim.resonance_p, "set dV = 2pU");
  simulate->add_option("--params", sim.params_file, "JSON parameter file");
  simulate->add_option("--unit", sim.unit, "natural | nK");
  simulate->add_option("--t-max", sim.t_max, "end time (ms for nK)");
  simulate->add_option("--t-steps", sim.t_steps, "number of time points");
  simulate->add_option("--out", sim.out, "trajectory CSV path (default stdout)");
  simulate->add_option("--report", sim.report, "entanglement report JSON path");

  int figure_id = 0;
  std::string figure_dir;
  auto* figure = app.add_subcommand("figure", "write the CSV set and manifest of a figure");
  figure->add_option("id", figure_id, "1..5")->required()->check(CLI::Range(1, 5));
  figure->add_option("--out-dir", figure_dir, "output directory (default figure<id>)");

  DesignArgs des;
  auto* design = app.add_subcommand("design", "resonant NOON design table");
  design->add_option("--n-atoms", des.n_atoms, "total atoms N");
  design->add_option("--noon-size", des.noon_size, "atoms p' = N - p in the NOON part");
  design->add_option("--zeta", des.zeta, "J / U");
  design->add_option("--interaction", des.interaction, "U (default 0.53299 for nK, 1 otherwise)");
  design->add_option("--unit", des.unit, "nK | natural");
  design->add_flag("--json", des.json, "print JSON instead of a table");

  CheckOptions chk;
  auto* check = app.add_subcommand("check", "analytic-vs-ED cross-validation");
  check->add_flag("--strict", chk.strict, "halve every tolerance");
  check->add_option("--max-atoms", chk.max_atoms, "largest N in the splitting grids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*simulate) return run_simulate(sim, out, err);
    if (*figure) return run_figure(figure_id, figure_dir, out);
    if (*design) return run_design(des, out);
    if (*check) {
      const auto results = run_cross_validation(chk);
      out << format_check_table(results);
      return all_passed(results) ? kExitOk : kExitValidation;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitUsage;
}

}  // namespace dwt::cli
