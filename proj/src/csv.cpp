#include "dwt/csv.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace dwt {

namespace {

const char* kSweepColumns[] = {"series", "x",      "amplitude", "frequency", "log10_value", "value",
                               "provenance", "regime", "zeta",   "resonance_p", "refined",   "flagged"};

std::string optional_number(const std::optional<double>& x) { return x ? format_number(*x) : std::string(); }

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(text);
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void write_time_series_csv(std::ostream& out, const TimeSeries& series, double time_factor) {
  out << "time";
  for (int n = 0; n <= series.n_atoms; ++n) out << ",P_" << n;
  out << ",mean,variance\r\n";
  for (std::size_t i = 0; i < series.size(); ++i) {
    out << format_number(series.times[i] * time_factor);
    for (double p : series.distribution[i]) out << ',' << format_number(p);
    out << ',' << format_number(series.mean[i]) << ',' << format_number(series.variance[i]) << "\r\n";
  }
}

void write_sweep_csv(std::ostream& out, const SweepResult& sweep) {
  bool first = true;
  for (const char* c : kSweepColumns) {
    out << (first ? "" : ",") << c;
    first = false;
  }
  out << "\r\n";
  for (const auto& r : sweep.records) {
    std::string log10_value;
    std::string value;
    if (r.value) {
      if (!r.value->is_zero()) log10_value = format_number(r.value->log10_magnitude());
      if (std::fabs(r.value->ln_magnitude()) < kLogScalarDoubleLimit || r.value->is_zero()) {
        value = format_number(r.value->to_double());
      }
    }
    out << csv_field(r.series) << ',' << format_number(r.x) << ',' << optional_number(r.amplitude) << ','
        << optional_number(r.frequency) << ',' << log10_value << ',' << value << ','
        << (r.provenance ? to_string(*r.provenance) : "") << ',' << (r.regime ? to_string(r.regime->kind) : "")
        << ',' << (r.regime ? format_number(r.regime->zeta) : "") << ','
        << (r.resonance_order ? std::to_string(*r.resonance_order) : "") << ',' << (r.refined ? 1 : 0) << ','
        << (r.flagged ? 1 : 0) << "\r\n";
  }
}

nlohmann::ordered_json sweep_sidecar(const SweepResult& sweep) {
  nlohmann::ordered_json j;
  j["axis"] = sweep.axis;
  j["quantity"] = sweep.quantity;
  j["columns"] = std::vector<std::string>(std::begin(kSweepColumns), std::end(kSweepColumns));
  j["series"] = sweep.series_labels();
  j["points"] = sweep.records.size();
  j["metadata"] = sweep.metadata;
  return j;
}

nlohmann::ordered_json to_json(const EntanglementReport& report) {
  return nlohmann::ordered_json::parse(report.to_json());
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

nlohmann::ordered_json Manifest::to_json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["generated_utc"] = utc_timestamp();
  j["parameters"] = parameters;
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const auto& f : files) {
    nlohmann::ordered_json e = {{"file", f.file}, {"kind", f.kind}, {"description", f.description}};
    for (const auto& [key, value] : f.info.items()) e[key] = value;
    list.push_back(e);
  }
  j["files"] = list;
  return j;
}

std::size_t CsvTable::column(std::string_view name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  throw std::out_of_range("no CSV column " + std::string(name));
}

CsvTable parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> lines;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;
  bool any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
      continue;
    }
    if (c == '"') {
      quoted = true;
      any = true;
    } else if (c == ',') {
      row.push_back(std::move(field));
      field.clear();
      any = true;
    } else if (c == '\r' || c == '\n') {
      if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
      row.push_back(std::move(field));
      field.clear();
      lines.push_back(std::move(row));
      row.clear();
      any = false;
    } else {
      field += c;
      any = true;
    }
  }
  if (quoted) throw std::runtime_error("CSV: unterminated quoted field");
  if (any) {
    row.push_back(std::move(field));
    lines.push_back(std::move(row));
  }
  CsvTable table;
  if (lines.empty()) return table;
  table.header = std::move(lines.front());
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].size() != table.header.size()) {
      throw std::runtime_error("CSV: row " + std::to_string(i) + " has " + std::to_string(lines[i].size()) +
                               " fields, header has " + std::to_string(table.header.size()));
    }
    table.rows.push_back(std::move(lines[i]));
  }
  return table;
}

CsvTable read_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_csv(buf.str());
}

}  // namespace dwt
