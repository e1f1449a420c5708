// Copyright 2026 The Blockade Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "blockade/csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "blockade/errors.hpp"

namespace blockade {

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

std::string format_number(double v) {
  if (!std::isfinite(v)) return kUndefinedMarker;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void write_csv(std::ostream& out, const SweepResult& result) {
  for (const auto& c : result.columns) out << c << ',';
  out << "status\n";
  for (std::size_t r = 0; r < result.rows.size(); ++r) {
    for (const auto& v : result.rows[r]) out << (v ? format_number(*v) : kUndefinedMarker) << ',';
    out << result.status[r] << '\n';
  }
}

void write_csv(const std::string& path, const SweepResult& result) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::InvalidArgument, "cannot write '" + path + "'");
  write_csv(out, result);
}

SweepResult read_csv(std::istream& in) {
  SweepResult result;
  std::string line;
  if (!std::getline(in, line)) fail(ErrorKind::InvalidArgument, "empty CSV");
  auto header = split(line);
  if (header.empty() || header.back() != "status") {
    fail(ErrorKind::InvalidArgument, "CSV header must end with a status column");
  }
  header.pop_back();
  result.columns = header;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto cells = split(line);
    if (cells.size() != header.size() + 1) {
      fail(ErrorKind::InvalidArgument, "CSV row has wrong number of cells");
    }
    std::vector<std::optional<double>> row;
    for (std::size_t c = 0; c < header.size(); ++c) {
      if (cells[c] == kUndefinedMarker) {
        row.emplace_back();
        continue;
      }
      double v = 0.0;
      const char* first = cells[c].data();
      const char* last = first + cells[c].size();
      auto [ptr, ec] = std::from_chars(first, last, v);
      if (ec != std::errc() || ptr != last) {
        fail(ErrorKind::InvalidArgument, "bad CSV number '" + cells[c] + "'");
      }
      row.emplace_back(v);
    }
    result.rows.push_back(std::move(row));
    result.status.push_back(cells.back());
  }
  return result;
}

SweepResult read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::InvalidArgument, "cannot open '" + path + "'");
  return read_csv(in);
}

}  // namespace blockade
