#pragma once

// CSV and JSON output. Numbers are written with 17 significant digits and data
// files carry no timestamps, so identical runs give identical bytes.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "dwt/dynamics.hpp"
#include "dwt/entanglement.hpp"
#include "dwt/scan.hpp"

namespace dwt {

/// %.17g-style text; "nan", "inf", "-inf" for non-finite values.
std::string format_number(double x);

/// RFC 4180 field: quoted when it holds a comma, quote, CR or LF.
std::string csv_field(std::string_view text);

/// time, P_0..P_N, mean, variance. Times are multiplied by time_factor.
void write_time_series_csv(std::ostream& out, const TimeSeries& series, double time_factor = 1.0);

/// series, x, amplitude, frequency, log10_value, value, provenance, regime,
/// zeta, resonance_p, refined, flagged. Missing cells are empty; value is
/// empty when it does not fit in a double.
void write_sweep_csv(std::ostream& out, const SweepResult& sweep);

/// Sidecar describing a sweep: axis, quantity, column list, metadata.
nlohmann::ordered_json sweep_sidecar(const SweepResult& sweep);

nlohmann::ordered_json to_json(const EntanglementReport& report);

/// Writes text to path, creating parent directories. Throws std::runtime_error.
void write_text_file(const std::filesystem::path& path, std::string_view text);

struct ManifestEntry {
  std::string file;  ///< relative to the manifest
  std::string kind;  ///< "trajectory", "sweep", "sidecar", "report", ...
  std::string description;
  /// Extra keys, e.g. axis ranges of a heatmap.
  nlohmann::ordered_json info = nlohmann::ordered_json::object();
};

struct Manifest {
  std::string command;
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  std::vector<ManifestEntry> files;

  /// Includes the generation time (UTC, ISO 8601); the only timestamped output.
  nlohmann::ordered_json to_json() const;
};

/// Parsed CSV: header plus rows of raw fields. Handles RFC 4180 quoting.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /// Column index by name; throws std::out_of_range.
  std::size_t column(std::string_view name) const;
};
CsvTable parse_csv(std::string_view text);
CsvTable read_csv(const std::filesystem::path& path);

}  // namespace dwt
