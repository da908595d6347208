// Copyright 2026 The Laughlin Bundle Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <iomanip>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "laughlin/cli.hpp"
#include "laughlin/error.hpp"
#include "laughlin/laughlin.hpp"
#include "laughlin/pushforward.hpp"

namespace laughlin::cli {
namespace {

std::string flatness_status(const ChernVector& v) {
  if (v.genus() <= 1 || v.rank().is_zero()) return "n/a";
  const auto defects = projective_flatness_defect(v);
  for (std::size_t i = 0; i < defects.size(); ++i) {
    if (!defects[i].is_zero()) {
      return "defect(m=" + std::to_string(i + 2) + ")=" + defects[i].to_string();
    }
  }
  return "compatible";
}

int max_genus(const std::vector<Record>& records) {
  int g = 0;
  for (const auto& r : records) g = std::max(g, r.params.g);
  return g;
}

std::string opt_string(const std::optional<Rational>& v) { return v ? v->to_string() : std::string(); }

std::vector<std::string> header(int genus) {
  std::vector<std::string> h = {"g", "N", "d", "b", "p", "r", "rank", "slope"};
  for (int m = 0; m <= genus; ++m) h.push_back("c_" + std::to_string(m));
  h.emplace_back("flatness");
  h.emplace_back("status");
  return h;
}

// One cell per header column; absent values are empty strings.
std::vector<std::string> cells(const Record& r, int genus) {
  const auto& p = r.params;
  std::vector<std::string> row = {std::to_string(p.g), std::to_string(p.N), std::to_string(p.d),
                                  std::to_string(p.b), std::to_string(p.p()), std::to_string(p.r()),
                                  opt_string(r.rank), opt_string(r.slope)};
  for (int m = 0; m <= genus; ++m) {
    row.push_back(static_cast<std::size_t>(m) < r.ch.c.size() ? r.ch.c[static_cast<std::size_t>(m)].to_string()
                                                              : std::string());
  }
  row.push_back(r.flatness);
  row.push_back(r.status);
  return row;
}

void write_json(std::ostream& os, const std::vector<Record>& records) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& r : records) {
    const auto& p = r.params;
    nlohmann::ordered_json row;
    row["g"] = p.g;
    row["N"] = p.N;
    row["d"] = p.d;
    row["b"] = p.b;
    row["p"] = p.p();
    row["r"] = p.r();
    row["rank"] = r.rank ? nlohmann::ordered_json(r.rank->to_string()) : nlohmann::ordered_json();
    row["slope"] = r.slope ? nlohmann::ordered_json(r.slope->to_string()) : nlohmann::ordered_json();
    for (std::size_t m = 0; m < r.ch.c.size(); ++m) row["c_" + std::to_string(m)] = r.ch.c[m].to_string();
    row["flatness"] = r.flatness;
    row["status"] = r.status;
    out.push_back(std::move(row));
  }
  os << out.dump(2) << '\n';
}

// RFC 4180: quote cells holding separators, quotes or line breaks.
std::string csv_cell(const std::string& cell) {
  if (cell.find_first_of(",\"\r\n") == std::string::npos) return cell;
  std::string quoted = "\"";
  for (char ch : cell) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + '"';
}

void write_csv(std::ostream& os, const std::vector<Record>& records) {
  const int genus = max_genus(records);
  auto emit = [&os](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_cell(row[i]);
    os << '\n';
  };
  emit(header(genus));
  for (const auto& r : records) emit(cells(r, genus));
}

void write_table(std::ostream& os, const std::vector<Record>& records) {
  const int genus = max_genus(records);
  std::vector<std::vector<std::string>> rows;
  auto h = header(genus);
  // Human-only column: decimal approximation of the slope.
  h.insert(h.begin() + 8, "slope~");
  rows.push_back(h);
  for (const auto& r : records) {
    auto row = cells(r, genus);
    std::string approx;
    if (r.slope) {
      std::ostringstream ss;
      ss << "~" << std::setprecision(6) << r.slope->to_double();
      approx = ss.str();
    }
    row.insert(row.begin() + 8, approx);
    rows.push_back(std::move(row));
  }
  std::vector<std::size_t> width(h.size(), 0);
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      const bool last = i + 1 == row.size();
      os << (last ? std::left : std::right) << std::setw(last ? 0 : static_cast<int>(width[i])) << row[i]
         << (last ? "" : "  ");
    }
    os << '\n';
  }
}

}  // namespace

Record evaluate_point(const LaughlinParams& params, Level level) {
  Record rec;
  rec.params = params;
  try {
    params.validate();
  } catch (const Error& e) {
    rec.skip_reason = e.what();
    rec.flatness = "n/a";
    rec.status = std::string("skipped: ") + e.what();
    return rec;
  }
  rec.ch = closed_form_ch(params);
  rec.rank = rank(params);
  if (!rec.rank->is_zero()) rec.slope = slope(rec.ch);
  rec.flatness = flatness_status(rec.ch);
  rec.status = "ok";
  if (level == Level::Closed) return rec;
  if (chern_via_series(params) != rec.ch) {
    rec.status = "mismatch: series";
    return rec;
  }
  if (level == Level::Series) return rec;
  if (params.g > kOracleMaxGenus || params.N > kOracleMaxParticles) {
    rec.status = "ok (oracle beyond scale)";
  } else if (grr_oracle(params) != rec.ch) {
    rec.status = "mismatch: oracle";
  }
  return rec;
}

std::vector<Record> compute_records(const SweepSpec& spec) {
  const auto grid = expand_grid(spec);
  return parallel_map<Record>(grid.size(), spec.jobs, [&] {
    return [&](std::size_t i) { return evaluate_point(grid[i], spec.level); };
  });
}

void write_records(std::ostream& os, const std::vector<Record>& records, Format format) {
  switch (format) {
    case Format::Json: write_json(os, records); break;
    case Format::Csv: write_csv(os, records); break;
    case Format::Table: write_table(os, records); break;
  }
}

}  // namespace laughlin::cli
