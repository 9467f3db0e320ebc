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

#pragma once

#include <array>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "eacap/experiment.hpp"
#include "eacap/version.hpp"

namespace eacap {

inline constexpr int kSchemaVersion = 1;

enum class OutputFormat { Csv, Json };

inline constexpr std::string_view kSweepCsvHeader =
    "p_exp,p_effective,I_measured,I_sigma,C_theory";
inline constexpr std::string_view kCapacityCsvHeader = "p,C";

struct CapacitySample {
  double p = 0.0;
  double capacity = 0.0;
};

/// One command's worth of results plus the settings needed to rerun it.
struct OutputRecordSet {
  OutputFormat format = OutputFormat::Csv;
  std::string command;
  std::uint64_t seed = kDefaultSeed;
  nlohmann::json metadata = nlohmann::json::object();
  std::variant<std::vector<CapacitySample>, std::vector<SweepRecord>> records;
};

/// Shortest decimal form that parses back to the same double; NaN prints as
/// "nan" (failed sweep points).
inline std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

inline double parse_double(std::string_view s) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
    throw std::invalid_argument("malformed number: " + std::string(s));
  return v;
}

inline std::string to_csv(const OutputRecordSet& set) {
  std::string out;
  out += "# tool: ";
  out += kToolName;
  out += ' ';
  out += kToolVersion;
  out += '\n';
  out += "# command: " + set.command + '\n';
  out += "# seed: " + std::to_string(set.seed) + '\n';
  for (const auto& item : set.metadata.items())
    out += "# " + item.key() + ": " + item.value().dump() + '\n';

  if (const auto* caps = std::get_if<std::vector<CapacitySample>>(&set.records)) {
    out += std::string(kCapacityCsvHeader) + '\n';
    for (const CapacitySample& s : *caps)
      out += format_double(s.p) + ',' + format_double(s.capacity) + '\n';
  } else {
    const auto& sweep = std::get<std::vector<SweepRecord>>(set.records);
    out += std::string(kSweepCsvHeader) + '\n';
    for (const SweepRecord& r : sweep) {
      out += format_double(r.p_exp) + ',' + format_double(r.p_effective) + ',' +
             format_double(r.i_measured) + ',' + format_double(r.i_sigma) + ',' +
             format_double(r.c_theory) + '\n';
    }
  }
  return out;
}

/// NaN is not representable in JSON; nlohmann serializes it as null and the
/// parser below maps null back to NaN.
inline nlohmann::json to_json(const OutputRecordSet& set) {
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
  j["command"] = set.command;
  j["seed"] = set.seed;
  j["metadata"] = set.metadata;

  nlohmann::json records = nlohmann::json::array();
  if (const auto* caps = std::get_if<std::vector<CapacitySample>>(&set.records)) {
    for (const CapacitySample& s : *caps)
      records.push_back({{"p", s.p}, {"capacity", s.capacity}});
  } else {
    for (const SweepRecord& r : std::get<std::vector<SweepRecord>>(set.records)) {
      nlohmann::json rec = {{"p_exp", r.p_exp},
                            {"p_effective", r.p_effective},
                            {"i_measured", r.i_measured},
                            {"i_sigma", r.i_sigma},
                            {"c_theory", r.c_theory}};
      if (r.error) rec["error"] = *r.error;
      records.push_back(std::move(rec));
    }
  }
  j["records"] = std::move(records);
  return j;
}

inline std::string serialize(const OutputRecordSet& set) {
  if (set.format == OutputFormat::Csv) return to_csv(set);
  return to_json(set).dump(2) + '\n';
}

namespace detail {

inline std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    if (pos == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

/// Data lines of a CSV document: comments ('#') and blanks skipped, the
/// header checked and consumed.
inline std::vector<std::string_view> csv_data_lines(std::string_view text,
                                                    std::string_view header) {
  std::vector<std::string_view> lines;
  bool seen_header = false;
  for (std::string_view line : split(text, '\n')) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    if (!seen_header) {
      if (line != header)
        throw std::invalid_argument("unexpected CSV header: " + std::string(line));
      seen_header = true;
      continue;
    }
    lines.push_back(line);
  }
  if (!seen_header) throw std::invalid_argument("CSV header missing");
  return lines;
}

}  // namespace detail

inline std::vector<CapacitySample> parse_capacity_csv(std::string_view text) {
  std::vector<CapacitySample> samples;
  for (std::string_view line : detail::csv_data_lines(text, kCapacityCsvHeader)) {
    const auto fields = detail::split(line, ',');
    if (fields.size() != 2)
      throw std::invalid_argument("capacity row needs 2 fields: " + std::string(line));
    samples.push_back({parse_double(fields[0]), parse_double(fields[1])});
  }
  return samples;
}

inline std::vector<SweepRecord> parse_sweep_csv(std::string_view text) {
  std::vector<SweepRecord> records;
  for (std::string_view line : detail::csv_data_lines(text, kSweepCsvHeader)) {
    const auto fields = detail::split(line, ',');
    if (fields.size() != 5)
      throw std::invalid_argument("sweep row needs 5 fields: " + std::string(line));
    SweepRecord r;
    r.p_exp = parse_double(fields[0]);
    r.p_effective = parse_double(fields[1]);
    r.i_measured = parse_double(fields[2]);
    r.i_sigma = parse_double(fields[3]);
    r.c_theory = parse_double(fields[4]);
    records.push_back(std::move(r));
  }
  return records;
}

inline OutputRecordSet parse_json(std::string_view text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  if (j.at("schema_version").get<int>() != kSchemaVersion)
    throw std::invalid_argument("unsupported schema version");

  OutputRecordSet set;
  set.format = OutputFormat::Json;
  set.command = j.at("command").get<std::string>();
  set.seed = j.at("seed").get<std::uint64_t>();
  set.metadata = j.at("metadata");

  const auto as_double = [](const nlohmann::json& v) {
    return v.is_null() ? std::numeric_limits<double>::quiet_NaN()
                       : v.get<double>();
  };

  const nlohmann::json& records = j.at("records");
  if (!records.empty() && records.front().contains("p")) {
    std::vector<CapacitySample> caps;
    for (const auto& rec : records)
      caps.push_back({as_double(rec.at("p")), as_double(rec.at("capacity"))});
    set.records = std::move(caps);
  } else {
    std::vector<SweepRecord> sweep;
    for (const auto& rec : records) {
      SweepRecord r;
      r.p_exp = as_double(rec.at("p_exp"));
      r.p_effective = as_double(rec.at("p_effective"));
      r.i_measured = as_double(rec.at("i_measured"));
      r.i_sigma = as_double(rec.at("i_sigma"));
      r.c_theory = as_double(rec.at("c_theory"));
      if (rec.contains("error")) r.error = rec.at("error").get<std::string>();
      sweep.push_back(std::move(r));
    }
    set.records = std::move(sweep);
  }
  return set;
}

}  // namespace eacap
