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

// Column classification on an ordered instance. Adding column k changes
// the value at a_k to z_k(a_k) = max{z_{k-1}(a_k), c_k}; comparing the two
// terms decides whether the column can ever matter.

#ifndef VFLAT_COLUMNS_HPP_
#define VFLAT_COLUMNS_HPP_

#include <cstddef>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "vflat/error.hpp"
#include "vflat/instance.hpp"
#include "vflat/level_sets.hpp"
#include "vflat/value_table.hpp"

namespace vflat {

enum class ColumnCase {
  kBelow,  // z_{k-1}(a_k) < c_k: a_k becomes level-set-minimal
  kEqual,  // z_{k-1}(a_k) = c_k
  kAbove,  // z_{k-1}(a_k) > c_k: column k is never used
};

inline std::string_view ColumnCaseName(ColumnCase c) {
  switch (c) {
    case ColumnCase::kBelow: return "BELOW";
    case ColumnCase::kEqual: return "EQUAL";
    case ColumnCase::kAbove: return "ABOVE";
  }
  return "?";
}

struct ColumnInfo {
  std::size_t original = 0;  // 0-based index in the unordered instance
  ColumnCase tag = ColumnCase::kBelow;
  bool lsm = false;          // a_k in B_k
  bool necessary = false;    // z_n(a_k) = c_k and a_k in B_n
  Value previous_value = 0;  // z_{k-1}(a_k)
};

struct ColumnClassification {
  std::vector<ColumnInfo> columns;  // in ordered position

  std::vector<std::size_t> NecessaryOriginal() const {
    std::vector<std::size_t> out;
    for (const auto& c : columns) {
      if (c.necessary) out.push_back(c.original);
    }
    return out;
  }
};

// `permutation[k]` maps the ordered position k back to the original column;
// pass an empty vector for the identity.
inline ColumnClassification ClassifyColumns(const Instance& inst, const ValueStack& stack,
                                            std::vector<std::size_t> permutation = {}) {
  stack.RequireAllLevels();
  if (!OrderingViolations(inst).empty()) {
    throw Error(ErrorKind::kPrecondition,
                "columns are not ordered: an earlier column dominates a later one");
  }
  if (permutation.empty()) {
    permutation.resize(inst.n());
    std::iota(permutation.begin(), permutation.end(), std::size_t{0});
  }
  const std::size_t n = inst.n();
  ColumnClassification out;
  for (std::size_t k = 1; k <= n; ++k) {
    const Point& a = inst.columns[k - 1];
    const Value c = inst.c[k - 1];
    ColumnInfo info;
    info.original = permutation.at(k - 1);
    info.previous_value = stack.At(k - 1, a);
    info.tag = info.previous_value < c    ? ColumnCase::kBelow
               : info.previous_value == c ? ColumnCase::kEqual
                                          : ColumnCase::kAbove;
    info.lsm = IsLsm(stack, k, a);
    info.necessary = stack.At(n, a) == c && IsLsm(stack, n, a);
    out.columns.push_back(info);
  }
  return out;
}

}  // namespace vflat

#endif  // VFLAT_COLUMNS_HPP_
