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

// Problem instances max{c'x : Ax <= beta, x integer >= 0} with nonnegative
// integer data, their validation, JSON ingestion and column ordering.

#ifndef VFLAT_INSTANCE_HPP_
#define VFLAT_INSTANCE_HPP_

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "vflat/error.hpp"
#include "vflat/lattice.hpp"

namespace vflat {

// Columns are stored 0-based: columns[j] is a_{j+1}. Level k of the value
// stack uses columns[0..k-1].
struct Instance {
  std::string name;
  std::vector<Point> columns;
  std::vector<Value> c;
  Point b;

  std::size_t m() const { return b.size(); }
  std::size_t n() const { return columns.size(); }
  const Point& column(std::size_t j) const { return columns[j]; }
};

struct Violation {
  std::string code;
  std::string message;
  std::vector<std::size_t> indices;  // 1-based columns (or rows for bounds)
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }

  std::string ToString() const {
    std::string out;
    for (const auto& v : violations) {
      out += v.code + ": " + v.message;
      if (!v.indices.empty()) {
        out += " [";
        for (std::size_t i = 0; i < v.indices.size(); ++i) {
          if (i > 0) out += ",";
          out += std::to_string(v.indices[i]);
        }
        out += "]";
      }
      out += "\n";
    }
    return out;
  }
};

class ValidationError : public Error {
 public:
  explicit ValidationError(ValidationReport report)
      : Error(ErrorKind::kValidation, report.ToString()), report_(std::move(report)) {}

  const ValidationReport& report() const noexcept { return report_; }

 private:
  ValidationReport report_;
};

inline ValidationReport Validate(const Instance& inst) {
  ValidationReport report;
  auto add = [&](std::string code, std::string message, std::vector<std::size_t> idx) {
    report.violations.push_back({std::move(code), std::move(message), std::move(idx)});
  };
  if (inst.m() == 0) add("dimension", "no constraints (m = 0)", {});
  if (inst.n() == 0) add("dimension", "no variables (n = 0)", {});
  if (inst.c.size() != inst.n()) {
    add("dimension", "c has " + std::to_string(inst.c.size()) + " entries, expected " +
                         std::to_string(inst.n()),
        {});
  }
  std::vector<std::size_t> bad_shape, negative_entry, zero_col, exceeds, negative_c;
  for (std::size_t j = 0; j < inst.n(); ++j) {
    const Point& a = inst.columns[j];
    if (a.size() != inst.m()) {
      bad_shape.push_back(j + 1);
      continue;
    }
    bool all_zero = true;
    bool negative = false;
    bool over = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] < 0) negative = true;
      if (a[i] != 0) all_zero = false;
      if (a[i] > inst.b[i]) over = true;
    }
    if (negative) negative_entry.push_back(j + 1);
    if (all_zero) zero_col.push_back(j + 1);
    if (over) exceeds.push_back(j + 1);
  }
  for (std::size_t j = 0; j < inst.c.size(); ++j) {
    if (inst.c[j] < 0) negative_c.push_back(j + 1);
  }
  std::vector<std::size_t> negative_b;
  for (std::size_t i = 0; i < inst.b.size(); ++i) {
    if (inst.b[i] < 0) negative_b.push_back(i + 1);
  }
  if (!bad_shape.empty()) add("dimension", "column length differs from m", bad_shape);
  if (!negative_entry.empty()) add("negative_entry", "negative constraint coefficient", negative_entry);
  if (!zero_col.empty()) add("zero_column", "zero column", zero_col);
  if (!exceeds.empty()) add("column_exceeds_b", "column exceeds b", exceeds);
  if (!negative_c.empty()) {
    add("negative_objective", "negative objective coefficient (c >= 0 is assumed w.l.o.g.)",
        negative_c);
  }
  if (!negative_b.empty()) add("negative_bound", "negative right-hand-side bound", negative_b);
  return report;
}

inline void RequireValid(const Instance& inst) {
  ValidationReport report = Validate(inst);
  if (!report.ok()) throw ValidationError(std::move(report));
}

namespace internal {

inline Value JsonInteger(const nlohmann::json& v, const std::string& where) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)) {
      throw Error(ErrorKind::kInvalidInput, where + ": integer out of range");
    }
    return v.get<Value>();
  }
  throw Error(ErrorKind::kInvalidInput, where + ": non-integer entry " + v.dump());
}

inline std::vector<Value> JsonIntegerList(const nlohmann::json& v, const std::string& where) {
  if (!v.is_array()) throw Error(ErrorKind::kInvalidInput, where + ": expected a list");
  std::vector<Value> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(JsonInteger(v[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

}  // namespace internal

// Reads the instance document without checking the modelling assumptions.
// Structural problems (syntax, non-integers, shape) throw kInvalidInput.
inline Instance ReadInstanceDocument(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::kInvalidInput, std::string("malformed document: ") + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorKind::kInvalidInput, "document must be an object");
  for (const auto& [key, unused] : doc.items()) {
    if (key != "name" && key != "A" && key != "c" && key != "b") {
      throw Error(ErrorKind::kInvalidInput, "unknown key '" + key + "'");
    }
  }
  for (const char* key : {"A", "c", "b"}) {
    if (!doc.contains(key)) {
      throw Error(ErrorKind::kInvalidInput, std::string("missing key '") + key + "'");
    }
  }
  Instance inst;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw Error(ErrorKind::kInvalidInput, "name must be a string");
    inst.name = doc["name"].get<std::string>();
  }
  const auto& rows = doc["A"];
  if (!rows.is_array() || rows.empty()) {
    throw Error(ErrorKind::kInvalidInput, "A must be a nonempty list of rows");
  }
  std::vector<std::vector<Value>> a;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    a.push_back(internal::JsonIntegerList(rows[i], "A[" + std::to_string(i) + "]"));
  }
  const std::size_t m = a.size();
  const std::size_t n = a[0].size();
  if (n == 0) throw Error(ErrorKind::kInvalidInput, "A has no columns");
  for (std::size_t i = 1; i < m; ++i) {
    if (a[i].size() != n) {
      throw Error(ErrorKind::kInvalidInput, "dimension mismatch: row " + std::to_string(i + 1) +
                                                " of A has " + std::to_string(a[i].size()) +
                                                " entries, expected " + std::to_string(n));
    }
  }
  inst.c = internal::JsonIntegerList(doc["c"], "c");
  inst.b = internal::JsonIntegerList(doc["b"], "b");
  if (inst.c.size() != n) {
    throw Error(ErrorKind::kInvalidInput, "dimension mismatch: c has " +
                                              std::to_string(inst.c.size()) +
                                              " entries, A has " + std::to_string(n) + " columns");
  }
  if (inst.b.size() != m) {
    throw Error(ErrorKind::kInvalidInput, "dimension mismatch: b has " +
                                              std::to_string(inst.b.size()) +
                                              " entries, A has " + std::to_string(m) + " rows");
  }
  inst.columns.assign(n, Point(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) inst.columns[j][i] = a[i][j];
  }
  return inst;
}

// Parses and validates. Assumption violations throw ValidationError.
inline Instance ParseInstance(std::string_view text) {
  Instance inst = ReadInstanceDocument(text);
  RequireValid(inst);
  return inst;
}

inline nlohmann::json ToJson(const Instance& inst) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < inst.m(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < inst.n(); ++j) row.push_back(inst.columns[j][i]);
    rows.push_back(std::move(row));
  }
  nlohmann::json doc;
  if (!inst.name.empty()) doc["name"] = inst.name;
  doc["A"] = std::move(rows);
  doc["c"] = inst.c;
  doc["b"] = inst.b;
  return doc;
}

struct OrderedInstance {
  Instance instance;
  // permutation[new_index] = original index (both 0-based).
  std::vector<std::size_t> permutation;
};

// Stable sort on (component sum, lexicographic column, c, original index).
// A column that dominates a distinct column has a strictly larger sum, so
// no column precedes one it dominates. Duplicate columns end up adjacent
// with the cheaper copy first.
inline OrderedInstance OrderColumns(const Instance& inst) {
  std::vector<std::size_t> perm(inst.n());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  auto sum = [&](std::size_t j) {
    return std::accumulate(inst.columns[j].begin(), inst.columns[j].end(), Value{0});
  };
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t x, std::size_t y) {
    const Value sx = sum(x), sy = sum(y);
    if (sx != sy) return sx < sy;
    if (inst.columns[x] != inst.columns[y]) return inst.columns[x] < inst.columns[y];
    if (inst.c[x] != inst.c[y]) return inst.c[x] < inst.c[y];
    return x < y;
  });
  OrderedInstance out;
  out.instance.name = inst.name;
  out.instance.b = inst.b;
  for (std::size_t j : perm) {
    out.instance.columns.push_back(inst.columns[j]);
    out.instance.c.push_back(inst.c[j]);
  }
  out.permutation = std::move(perm);
  return out;
}

// Pairs (k, l), k < l, where column k componentwise dominates a distinct
// later column l. Empty for any output of OrderColumns.
inline std::vector<std::pair<std::size_t, std::size_t>> OrderingViolations(const Instance& inst) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t k = 0; k < inst.n(); ++k) {
    for (std::size_t l = k + 1; l < inst.n(); ++l) {
      if (inst.columns[k] != inst.columns[l] && Dominated(inst.columns[l], inst.columns[k])) {
        out.emplace_back(k, l);
      }
    }
  }
  return out;
}

inline Instance WithBound(Instance inst, Point b) {
  inst.b = std::move(b);
  return inst;
}

// Keeps the listed columns (0-based, in the given order).
inline Instance SelectColumns(const Instance& inst, const std::vector<std::size_t>& keep) {
  Instance out;
  out.name = inst.name;
  out.b = inst.b;
  for (std::size_t j : keep) {
    out.columns.push_back(inst.columns.at(j));
    out.c.push_back(inst.c.at(j));
  }
  return out;
}

}  // namespace vflat

#endif  // VFLAT_INSTANCE_HPP_
