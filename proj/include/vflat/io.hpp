// Copyright 2026 The vflat Authors
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

// Text exports: value tables and component maps as CSV (comma separated,
// '\n' line ends, mandatory header, integer fields only) and, for m = 2,
// a plain grayscale grid (P2 portable graymap).

#ifndef VFLAT_IO_HPP_
#define VFLAT_IO_HPP_

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "vflat/error.hpp"
#include "vflat/lattice.hpp"
#include "vflat/mc_level.hpp"
#include "vflat/value_table.hpp"

namespace vflat {

namespace internal {

inline std::string AxisHeader(std::size_t m) {
  std::string out;
  for (std::size_t i = 0; i < m; ++i) out += "beta_" + std::to_string(i + 1) + ",";
  return out;
}

inline std::string CsvCoords(const Point& p) {
  std::string out;
  for (Coord v : p) out += std::to_string(v) + ",";
  return out;
}

inline std::vector<std::string_view> SplitCsv(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    out.push_back(line.substr(start, comma == std::string_view::npos ? comma : comma - start));
    if (comma == std::string_view::npos) return out;
    start = comma + 1;
  }
}

inline std::int64_t CsvInteger(std::string_view field, std::size_t line) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw Error(ErrorKind::kInvalidInput, "line " + std::to_string(line) + ": bad integer '" +
                                              std::string(field) + "'");
  }
  return v;
}

}  // namespace internal

// Rows for every retained level (or just `only_k`), cells in lattice order.
inline std::string ValueTableCsv(const ValueStack& stack, std::optional<std::size_t> only_k = {}) {
  const LatticeBox& box = stack.box();
  std::string out = internal::AxisHeader(box.dim()) + "k,z\n";
  for (std::size_t k = 0; k <= stack.levels(); ++k) {
    if (only_k ? k != *only_k : !stack.Retained(k)) continue;
    auto t = stack.table(k);
    box.ForEach([&](std::size_t idx, const Point& beta) {
      out += internal::CsvCoords(beta) + std::to_string(k) + "," + std::to_string(t[idx]) + "\n";
    });
  }
  return out;
}

struct ParsedValueTables {
  std::size_t m = 0;
  std::map<std::size_t, std::map<Point, Value>> levels;
};

inline ParsedValueTables ParseValueTableCsv(std::string_view text) {
  ParsedValueTables out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    const auto fields = internal::SplitCsv(line);
    if (line_no == 1) {
      if (fields.size() < 3 || fields[fields.size() - 2] != "k" || fields.back() != "z") {
        throw Error(ErrorKind::kInvalidInput, "value CSV header must end with k,z");
      }
      out.m = fields.size() - 2;
      if (internal::AxisHeader(out.m) + "k,z" != line) {
        throw Error(ErrorKind::kInvalidInput, "unexpected value CSV header");
      }
      continue;
    }
    if (fields.size() != out.m + 2) {
      throw Error(ErrorKind::kInvalidInput, "line " + std::to_string(line_no) + ": expected " +
                                                std::to_string(out.m + 2) + " fields");
    }
    Point beta;
    for (std::size_t i = 0; i < out.m; ++i) beta.push_back(internal::CsvInteger(fields[i], line_no));
    const auto k = internal::CsvInteger(fields[out.m], line_no);
    if (k < 0) throw Error(ErrorKind::kInvalidInput, "negative level");
    out.levels[static_cast<std::size_t>(k)][beta] = internal::CsvInteger(fields[out.m + 1], line_no);
  }
  if (line_no == 0) throw Error(ErrorKind::kInvalidInput, "empty value CSV");
  return out;
}

inline std::string ComponentCsv(const ComponentMap& map) {
  const LatticeBox& box = map.box();
  std::string out = internal::AxisHeader(box.dim()) + "component,z\n";
  box.ForEach([&](std::size_t idx, const Point& beta) {
    out += internal::CsvCoords(beta) + std::to_string(map.LabelAt(idx)) + "," +
           std::to_string(map.values()[idx]) + "\n";
  });
  return out;
}

// P2 graymap of z_k over a two-dimensional box: beta_1 runs left to right,
// the top row is the largest beta_2, z scaled linearly onto 0..255.
inline std::string ValueHeatmapPgm(const ValueStack& stack, std::size_t k) {
  const LatticeBox& box = stack.box();
  if (box.dim() != 2) {
    throw Error(ErrorKind::kInvalidInput,
                "heatmap needs m = 2, instance has m = " + std::to_string(box.dim()));
  }
  auto t = stack.table(k);
  const Value top = *std::max_element(t.begin(), t.end());
  const Coord w = box.upper()[0] + 1;
  const Coord h = box.upper()[1] + 1;
  std::ostringstream out;
  out << "P2\n# z_" << k << "\n" << w << " " << h << "\n255\n";
  for (Coord row = h - 1; row >= 0; --row) {
    for (Coord col = 0; col < w; ++col) {
      const Value v = t[box.Index(Point{col, row})];
      const Value gray = top == 0 ? 0 : static_cast<Value>((static_cast<__int128>(v) * 255) / top);
      out << (col > 0 ? " " : "") << gray;
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace vflat

#endif  // VFLAT_IO_HPP_
