// Copyright 2026 The eacap authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "eacap/commands.hpp"
#include "eacap/output.hpp"

using eacap::CapacitySample;
using eacap::ExperimentConfig;
using eacap::GridSpec;
using eacap::OutputFormat;
using eacap::OutputRecordSet;
using eacap::SweepRecord;
using eacap::Visibility;

namespace {

OutputRecordSet sweep_set() {
  SweepRecord good;
  good.p_exp = 0.25;
  good.p_effective = 1.0 / 3.0;
  good.i_measured = 0.123456789012345678;
  good.i_sigma = 1e-3;
  good.c_theory = 0.5;

  SweepRecord failed;
  failed.p_exp = 0.5;
  failed.p_effective = 0.515;
  failed.i_measured = std::numeric_limits<double>::quiet_NaN();
  failed.i_sigma = std::numeric_limits<double>::quiet_NaN();
  failed.c_theory = 0.18439362231399437;
  failed.error = "no coincidences recorded for input state psi-";

  OutputRecordSet set;
  set.command = "sweep";
  set.seed = 0xDEADBEEFCAFEF00DULL;
  set.metadata["visibility"] = 0.94;
  set.records = std::vector<SweepRecord>{good, failed};
  return set;
}

}  // namespace

TEST_CASE("double formatting round-trips") {
  CHECK(eacap::format_double(0.0) == "0");
  CHECK(eacap::format_double(0.25) == "0.25");
  CHECK(eacap::format_double(std::nan("")) == "nan");
  for (double v : {1.0 / 3.0, 0.1, 1e-300, 6.02214076e23, -0.75,
                   0.20751874963942191}) {
    CHECK(eacap::parse_double(eacap::format_double(v)) == v);
  }
}

TEST_CASE("number parsing rejects junk") {
  CHECK_THROWS_AS(eacap::parse_double("abc"), std::invalid_argument);
  CHECK_THROWS_AS(eacap::parse_double("1.2x"), std::invalid_argument);
  CHECK_THROWS_AS(eacap::parse_double(""), std::invalid_argument);
  CHECK(std::isnan(eacap::parse_double("nan")));
}

TEST_CASE("capacity CSV round-trip") {
  OutputRecordSet set;
  set.command = "capacity";
  set.seed = 42;
  set.records = std::vector<CapacitySample>{
      {0.0, 2.0}, {1.0 / 3.0, 0.55}, {0.75, 0.0}, {1.0, 0.41503749927884382}};

  const std::string csv = eacap::to_csv(set);
  CHECK(csv.find("p,C\n") != std::string::npos);
  CHECK(csv.find('\r') == std::string::npos);
  CHECK(csv.rfind("# tool: eacap", 0) == 0);

  const auto parsed = eacap::parse_capacity_csv(csv);
  REQUIRE(parsed.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) {
    const auto& orig = std::get<std::vector<CapacitySample>>(set.records)[i];
    CHECK(parsed[i].p == orig.p);
    CHECK(parsed[i].capacity == orig.capacity);
  }
}

TEST_CASE("sweep CSV round-trip preserves values and NaN") {
  const OutputRecordSet set = sweep_set();
  const std::string csv = eacap::to_csv(set);
  CHECK(csv.find("p_exp,p_effective,I_measured,I_sigma,C_theory\n") !=
        std::string::npos);
  CHECK(csv.find("nan,nan") != std::string::npos);

  const auto parsed = eacap::parse_sweep_csv(csv);
  const auto& orig = std::get<std::vector<SweepRecord>>(set.records);
  REQUIRE(parsed.size() == orig.size());
  CHECK(parsed[0].p_effective == orig[0].p_effective);
  CHECK(parsed[0].i_measured == orig[0].i_measured);
  CHECK(parsed[0].i_sigma == orig[0].i_sigma);
  CHECK(std::isnan(parsed[1].i_measured));
  CHECK(std::isnan(parsed[1].i_sigma));
  CHECK(parsed[1].c_theory == orig[1].c_theory);
}

TEST_CASE("CSV parsing enforces the header and tolerates comments") {
  CHECK_THROWS_AS(eacap::parse_sweep_csv("a,b,c\n1,2,3\n"), std::invalid_argument);
  CHECK_THROWS_AS(eacap::parse_capacity_csv(""), std::invalid_argument);
  CHECK_THROWS_AS(eacap::parse_capacity_csv("p,C\n0.5\n"), std::invalid_argument);

  const auto rows = eacap::parse_capacity_csv(
      "# comment\np,C\r\n# another\n0.5,0.25\n\n");
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].p == 0.5);
  CHECK(rows[0].capacity == 0.25);
}

TEST_CASE("JSON round-trip with metadata, NaN and errors") {
  const OutputRecordSet set = sweep_set();
  const std::string text = eacap::serialize([&] {
    OutputRecordSet s = set;
    s.format = OutputFormat::Json;
    return s;
  }());

  const OutputRecordSet back = eacap::parse_json(text);
  CHECK(back.command == "sweep");
  CHECK(back.seed == 0xDEADBEEFCAFEF00DULL);
  CHECK(back.metadata.at("visibility").get<double>() == 0.94);

  const auto& orig = std::get<std::vector<SweepRecord>>(set.records);
  const auto& parsed = std::get<std::vector<SweepRecord>>(back.records);
  REQUIRE(parsed.size() == 2);
  CHECK(parsed[0].p_exp == orig[0].p_exp);
  CHECK(parsed[0].i_measured == orig[0].i_measured);
  CHECK(std::isnan(parsed[1].i_measured));
  REQUIRE(parsed[1].error.has_value());
  CHECK(*parsed[1].error == *orig[1].error);

  const nlohmann::json j = eacap::to_json(set);
  CHECK(j.at("schema_version").get<int>() == eacap::kSchemaVersion);
  CHECK(j.at("tool").at("name").get<std::string>() == eacap::kToolName);
}

TEST_CASE("CSV and JSON carry identical numbers") {
  const OutputRecordSet set = sweep_set();
  const auto from_csv = eacap::parse_sweep_csv(eacap::to_csv(set));
  const auto from_json = std::get<std::vector<SweepRecord>>(
      eacap::parse_json(eacap::to_json(set).dump()).records);

  REQUIRE(from_csv.size() == from_json.size());
  for (std::size_t i = 0; i < from_csv.size(); ++i) {
    const auto same = [](double a, double b) {
      return (std::isnan(a) && std::isnan(b)) || a == b;
    };
    CHECK(same(from_csv[i].p_exp, from_json[i].p_exp));
    CHECK(same(from_csv[i].p_effective, from_json[i].p_effective));
    CHECK(same(from_csv[i].i_measured, from_json[i].i_measured));
    CHECK(same(from_csv[i].i_sigma, from_json[i].i_sigma));
    CHECK(same(from_csv[i].c_theory, from_json[i].c_theory));
  }
}

TEST_CASE("grid parsing and points") {
  const GridSpec g = GridSpec::parse("0:1:5");
  CHECK(g.min == 0.0);
  CHECK(g.max == 1.0);
  CHECK(g.steps == 5);
  const auto pts = g.points();
  REQUIRE(pts.size() == 5);
  CHECK(pts[0] == 0.0);
  CHECK(pts[1] == 0.25);
  CHECK(pts[2] == 0.5);
  CHECK(pts[3] == 0.75);
  CHECK(pts[4] == 1.0);

  const auto single = GridSpec::parse("0.75:0.75:1").points();
  REQUIRE(single.size() == 1);
  CHECK(single[0] == 0.75);

  CHECK(GridSpec::parse("0.2:0.8:21").points().size() == 21);

  CHECK_THROWS_AS(GridSpec::parse("0:1"), std::invalid_argument);
  CHECK_THROWS_AS(GridSpec::parse("a:1:5"), std::invalid_argument);
  CHECK_THROWS_AS(GridSpec::parse("0:1:x"), std::invalid_argument);
  CHECK_THROWS_AS(GridSpec::parse("0:1:0"), std::invalid_argument);
  CHECK_THROWS_AS(GridSpec::parse("0.5:0.2:3"), std::invalid_argument);
  CHECK_THROWS_AS(GridSpec::parse("-0.1:1:5"), std::invalid_argument);
  CHECK_THROWS_AS(GridSpec::parse("0:1.2:5"), std::invalid_argument);
  CHECK_THROWS_AS(GridSpec::parse("0:0.5:1"), std::invalid_argument);
  CHECK_THROWS_AS(GridSpec::parse(""), std::invalid_argument);
}

TEST_CASE("capacity command emits the closed form on the grid") {
  const OutputRecordSet set =
      eacap::cmd_capacity(GridSpec::parse("0:1:5"), OutputFormat::Csv, 7);
  CHECK(set.command == "capacity");
  CHECK(set.seed == 7);
  const auto& caps = std::get<std::vector<CapacitySample>>(set.records);
  REQUIRE(caps.size() == 5);
  CHECK(caps[0].capacity == 2.0);
  CHECK(caps[2].p == 0.5);
  CHECK(caps[2].capacity == Catch::Approx(0.20751874963942191).margin(1e-14));
  CHECK(caps[3].capacity == 0.0);
  CHECK(caps[4].capacity == Catch::Approx(0.41503749927884382).margin(1e-14));
  CHECK(set.metadata.at("grid").at("steps").get<int>() == 5);
}

TEST_CASE("simulate command returns one record and the raw counts") {
  ExperimentConfig cfg;
  cfg.visibility = Visibility(0.94);
  cfg.p_exp = 0.0;
  cfg.mean_counts_per_input = 1e6;
  cfg.seed = 1;

  const OutputRecordSet set = eacap::cmd_simulate(cfg, OutputFormat::Csv);
  const auto& records = std::get<std::vector<SweepRecord>>(set.records);
  REQUIRE(records.size() == 1);
  CHECK(std::abs(records[0].i_measured - 1.6639116535318673) < 0.01);
  CHECK(records[0].c_theory == Catch::Approx(1.6639116535318673).margin(1e-12));
  CHECK(std::abs(records[0].p_effective - 0.045) < 1e-12);

  const auto& counts = set.metadata.at("counts");
  REQUIRE(counts.size() == 4);
  std::uint64_t total = 0;
  for (const auto& row : counts) {
    REQUIRE(row.size() == 4);
    for (const auto& cell : row) total += cell.get<std::uint64_t>();
  }
  CHECK(total > 0);
}

TEST_CASE("sweep command covers the grid in order") {
  ExperimentConfig base;
  base.visibility = Visibility(0.94);
  base.mean_counts_per_input = 2e3;
  base.seed = 4;

  const OutputRecordSet set =
      eacap::cmd_sweep(base, GridSpec::parse("0:1:11"), OutputFormat::Csv);
  const auto& records = std::get<std::vector<SweepRecord>>(set.records);
  REQUIRE(records.size() == 11);
  for (std::size_t i = 0; i < records.size(); ++i)
    CHECK(records[i].p_exp == Catch::Approx(i / 10.0).margin(1e-15));
  CHECK(set.metadata.at("grid").at("steps").get<int>() == 11);
  CHECK(set.metadata.at("error_method").get<std::string>() == "delta");
}

TEST_CASE("verification report rendering") {
  const eacap::VerificationReport good = eacap::run_verification(11);
  const std::string ok = eacap::render_report(good);
  CHECK(ok.find("PASS") != std::string::npos);
  CHECK(ok.find("FAIL") == std::string::npos);
  CHECK(ok.find("all checks passed") != std::string::npos);

  const eacap::VerificationReport bad = eacap::run_verification(11, 0.0);
  const std::string text = eacap::render_report(bad);
  CHECK(text.find("FAIL") != std::string::npos);
  CHECK(text.find("verification FAILED") != std::string::npos);
}

TEST_CASE("write_output writes files and reports path errors") {
  namespace fs = std::filesystem;
  const fs::path path = fs::temp_directory_path() / "eacap_output_test.csv";
  eacap::write_output("p,C\n0,2\n", path.string());
  std::ifstream in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  CHECK(buffer.str() == "p,C\n0,2\n");
  fs::remove(path);

  CHECK_THROWS_AS(
      eacap::write_output("x", "/nonexistent-dir-eacap/out.csv"),
      std::runtime_error);
}
