#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <limits>
#include <sstream>

#include "dwt/csv.hpp"

using namespace dwt;
namespace fs = std::filesystem;

TEST_CASE("number formatting round-trips with 17 digits") {
  CHECK(format_number(1.0) == "1");
  CHECK(format_number(0.1) == "0.10000000000000001");
  CHECK(std::strtod(format_number(-2.5e-300).c_str(), nullptr) == -2.5e-300);
  CHECK(format_number(std::nan("")) == "nan");
  CHECK(format_number(std::numeric_limits<double>::infinity()) == "inf");
  for (double x : {1.0 / 3.0, 6.02214076e23, -1e-17, 123456.789}) {
    CHECK(std::strtod(format_number(x).c_str(), nullptr) == x);
  }
}

TEST_CASE("RFC 4180 quoting") {
  CHECK(csv_field("plain") == "plain");
  CHECK(csv_field("a,b") == "\"a,b\"");
  CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
  const CsvTable t = parse_csv("x,label\r\n1,\"a,b\"\r\n2,\"q\"\"x\"\r\n");
  REQUIRE(t.rows.size() == 2);
  CHECK(t.rows[0][1] == "a,b");
  CHECK(t.rows[1][1] == "q\"x");
  CHECK(t.column("label") == 1);
  CHECK_THROWS_AS(t.column("nope"), std::out_of_range);
  CHECK_THROWS(parse_csv("a,b\n1\n"));
  CHECK_THROWS(parse_csv("a\n\"open\n"));
  CHECK(parse_csv("a,b\n1,2").rows.size() == 1);
}

TEST_CASE("trajectory CSV layout") {
  TimeSeries ts;
  ts.n_atoms = 2;
  ts.times = {0.0, 0.5};
  ts.distribution = {{1.0, 0.0, 0.0}, {0.25, 0.5, 0.25}};
  ts.mean = {0.0, 1.0};
  ts.variance = {0.0, 0.5};
  std::ostringstream os;
  write_time_series_csv(os, ts, 2.0);
  const CsvTable t = parse_csv(os.str());
  CHECK(t.header == std::vector<std::string>{"time", "P_0", "P_1", "P_2", "mean", "variance"});
  REQUIRE(t.rows.size() == 2);
  CHECK(t.rows[1][0] == "1");
  CHECK(t.rows[1][2] == "0.5");
}

TEST_CASE("sweep CSV and sidecar") {
  SweepResult s;
  s.axis = "n_atoms";
  s.quantity = "period";
  s.metadata["zeta"] = 0.1;
  SweepRecord small;
  small.series = "a";
  small.x = 1;
  small.value = LogScalar::from_double(2.5);
  small.provenance = Provenance::kPerturbative;
  SweepRecord huge = small;
  huge.x = 2;
  huge.value = LogScalar::from_log(1000.0);
  huge.flagged = true;
  s.records = {small, huge};
  s.grid = {1, 2};
  std::ostringstream os;
  write_sweep_csv(os, s);
  const CsvTable t = parse_csv(os.str());
  REQUIRE(t.rows.size() == 2);
  CHECK(t.rows[0][t.column("value")] == "2.5");
  CHECK(t.rows[1][t.column("value")].empty());
  CHECK(std::strtod(t.rows[1][t.column("log10_value")].c_str(), nullptr) ==
        doctest::Approx(1000.0 / std::log(10.0)));
  CHECK(t.rows[1][t.column("flagged")] == "1");
  CHECK(t.rows[0][t.column("provenance")] == "perturbative");
  CHECK(t.rows[0][t.column("amplitude")].empty());

  const auto side = sweep_sidecar(s);
  CHECK(side["axis"] == "n_atoms");
  CHECK(side["points"] == 2);
  CHECK(side["metadata"]["zeta"] == 0.1);
  CHECK(side["columns"].size() == t.header.size());
  CHECK_FALSE(side.dump().find("utc") != std::string::npos);
}

TEST_CASE("manifest carries the only timestamp") {
  Manifest m;
  m.command = "figure 9";
  m.parameters["n"] = 3;
  ManifestEntry e{"a.csv", "trajectory", "demo", nlohmann::ordered_json::object()};
  e.info["time_range"] = {0.0, 2.0};
  m.files.push_back(e);
  const auto j = m.to_json();
  CHECK(j["command"] == "figure 9");
  CHECK(j["generated_utc"].get<std::string>().size() == 20);
  CHECK(j["files"][0]["time_range"][1] == 2.0);
}

TEST_CASE("files are written with parent directories") {
  const fs::path dir = fs::temp_directory_path() / "dwt_test_io";
  fs::remove_all(dir);
  write_text_file(dir / "sub" / "x.csv", "a,b\r\n1,2\r\n");
  const CsvTable t = read_csv(dir / "sub" / "x.csv");
  CHECK(t.rows.size() == 1);
  CHECK_THROWS(read_csv(dir / "missing.csv"));
  fs::remove_all(dir);
}
