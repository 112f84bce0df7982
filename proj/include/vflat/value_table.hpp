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

// Restricted value functions z_0, ..., z_n over the right-hand-side lattice,
// where z_k(beta) is the optimum using only the first k columns.

#ifndef VFLAT_VALUE_TABLE_HPP_
#define VFLAT_VALUE_TABLE_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vflat/decimal.hpp"
#include "vflat/error.hpp"
#include "vflat/instance.hpp"
#include "vflat/lattice.hpp"

namespace vflat {

enum class Retention {
  kAllLevels,  // every z_k kept; required by the level-set analyses
  kSliding,    // two buffers during the build, only z_n afterwards
  kFinalOnly,  // single in-place buffer, only z_n
};

inline std::string_view RetentionName(Retention r) {
  switch (r) {
    case Retention::kAllLevels: return "all";
    case Retention::kSliding: return "sliding";
    case Retention::kFinalOnly: return "final";
  }
  return "?";
}

inline Retention ParseRetention(std::string_view text) {
  if (text == "all") return Retention::kAllLevels;
  if (text == "sliding") return Retention::kSliding;
  if (text == "final") return Retention::kFinalOnly;
  throw Error(ErrorKind::kInvalidInput, "unknown retention mode '" + std::string(text) + "'");
}

class ValueStack {
 public:
  ValueStack() = default;
  ValueStack(LatticeBox box, std::size_t levels, Retention retention)
      : box_(std::move(box)), levels_(levels), retention_(retention), tables_(levels + 1) {}

  const LatticeBox& box() const { return box_; }
  std::size_t levels() const { return levels_; }
  Retention retention() const { return retention_; }

  bool Retained(std::size_t k) const { return k < tables_.size() && !tables_[k].empty(); }

  void RequireRetained(std::size_t k) const {
    if (!Retained(k)) {
      throw Error(ErrorKind::kNotRetained,
                  "k not retained: level " + std::to_string(k) + " under retention '" +
                      std::string(RetentionName(retention_)) + "'");
    }
  }

  void RequireAllLevels() const {
    if (retention_ != Retention::kAllLevels) {
      throw Error(ErrorKind::kNotRetained,
                  "k not retained: operation needs every level (retention 'all')");
    }
  }

  std::span<const Value> table(std::size_t k) const {
    RequireRetained(k);
    return tables_[k];
  }

  // Writable access, used for fault injection in tests and diagnostics.
  std::span<Value> mutable_table(std::size_t k) {
    RequireRetained(k);
    return tables_[k];
  }

  Value At(std::size_t k, std::span<const Coord> beta) const {
    return table(k)[box_.CheckedIndex(beta)];
  }

  std::vector<Value>& storage(std::size_t k) { return tables_[k]; }

 private:
  LatticeBox box_;
  std::size_t levels_ = 0;
  Retention retention_ = Retention::kAllLevels;
  std::vector<std::vector<Value>> tables_;
};

namespace internal {

inline Value CheckedAdd(Value a, Value b, const LatticeBox& box, std::size_t idx,
                        std::size_t k) {
  Value out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(ErrorKind::kOverflow, "value overflow at level " + std::to_string(k) +
                                          ", beta = " + FormatPoint(box.PointAt(idx)));
  }
  return out;
}

// One sweep of z_k(beta) = max(z_{k-1}(beta), z_k(beta - a) + c) over an
// array that holds z_{k-1} on entry. Ascending colex order guarantees the
// cell beta - a has already been promoted to level k.
inline void ApplyColumn(const LatticeBox& box, std::span<const Coord> a, Value c,
                        std::size_t k, std::vector<Value>& table) {
  const std::size_t offset = box.Index(a);
  box.ForEach([&](std::size_t idx, const Point& beta) {
    if (!Dominated(a, beta)) return;
    const Value cand = CheckedAdd(table[idx - offset], c, box, idx, k);
    if (cand > table[idx]) table[idx] = cand;
  });
}

}  // namespace internal

inline ValueStack BuildStack(const Instance& inst, Retention retention = Retention::kAllLevels) {
  RequireValid(inst);
  LatticeBox box(inst.b);
  const std::size_t n = inst.n();
  std::size_t total = 0;
  const std::size_t copies = retention == Retention::kAllLevels ? n + 1 : 2;
  if (__builtin_mul_overflow(box.cell_count(), copies, &total)) {
    throw Error(ErrorKind::kOverflow, "table storage overflows 64 bits");
  }
  ValueStack stack(box, n, retention);
  std::vector<Value> current(box.cell_count(), 0);
  if (retention == Retention::kAllLevels) stack.storage(0) = current;
  for (std::size_t k = 1; k <= n; ++k) {
    if (retention == Retention::kSliding) {
      std::vector<Value> next = current;
      internal::ApplyColumn(box, inst.columns[k - 1], inst.c[k - 1], k, next);
      current.swap(next);
    } else {
      internal::ApplyColumn(box, inst.columns[k - 1], inst.c[k - 1], k, current);
    }
    if (retention == Retention::kAllLevels) stack.storage(k) = current;
  }
  if (retention != Retention::kAllLevels) stack.storage(n) = std::move(current);
  return stack;
}

// z_k at the componentwise floor of a decimal right-hand side.
inline Value Query(const ValueStack& stack, std::size_t k, const DecimalPoint& beta) {
  if (beta.size() != stack.box().dim()) {
    throw Error(ErrorKind::kInvalidInput, "beta has " + std::to_string(beta.size()) +
                                              " components, expected " +
                                              std::to_string(stack.box().dim()));
  }
  stack.RequireRetained(k);
  return stack.At(k, FloorPoint(beta));
}

// z(beta) = max{ z(beta - a_j) + c_j : a_j <= beta }, empty max = 0.
inline std::vector<Value> ClassicGilmoreGomory(const Instance& inst) {
  RequireValid(inst);
  LatticeBox box(inst.b);
  std::vector<std::size_t> offsets;
  for (const auto& a : inst.columns) offsets.push_back(box.Index(a));
  std::vector<Value> z(box.cell_count(), 0);
  box.ForEach([&](std::size_t idx, const Point& beta) {
    Value best = 0;
    for (std::size_t j = 0; j < inst.n(); ++j) {
      if (!Dominated(inst.columns[j], beta)) continue;
      best = std::max(best, internal::CheckedAdd(z[idx - offsets[j]], inst.c[j], box, idx, inst.n()));
    }
    z[idx] = best;
  });
  return z;
}

inline std::vector<Value> LevelValueSet(const ValueStack& stack, std::size_t k) {
  auto t = stack.table(k);
  std::vector<Value> values(t.begin(), t.end());
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

// ---------------------------------------------------------------------------
// Enumeration oracle. Exhausts every x in Z^k_+ with sum_j a_j x_j <= beta;
// shares no code with the recursions above.

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

// prod_j (max feasible x_j + 1) over the first k columns, saturating at
// UINT64_MAX.
inline std::uint64_t EnumerationBound(const Instance& inst, std::size_t k,
                                      std::span<const Coord> beta) {
  std::uint64_t bound = 1;
  for (std::size_t j = 0; j < k; ++j) {
    Coord most = INT64_MAX;
    for (std::size_t i = 0; i < beta.size(); ++i) {
      if (inst.columns[j][i] > 0) most = std::min(most, beta[i] / inst.columns[j][i]);
    }
    if (__builtin_mul_overflow(bound, static_cast<std::uint64_t>(most) + 1, &bound)) {
      return UINT64_MAX;
    }
  }
  return bound;
}

// Calls visit(x, usage, value) for every feasible x of IP_k(beta).
inline void EnumerateFeasible(
    const Instance& inst, std::size_t k, std::span<const Coord> beta, std::uint64_t cap,
    const std::function<void(const std::vector<Value>&, const Point&, Value)>& visit) {
  if (k > inst.n()) throw Error(ErrorKind::kInvalidInput, "level exceeds n");
  const std::uint64_t bound = EnumerationBound(inst, k, beta);
  if (bound > cap) {
    throw Error(ErrorKind::kCapExceeded,
                "enumeration bound " + (bound == UINT64_MAX ? std::string("> 2^64")
                                                            : std::to_string(bound)) +
                    " exceeds cap " + std::to_string(cap) + " at beta = " + FormatPoint(beta));
  }
  std::vector<Value> x(k, 0);
  Point remaining(beta.begin(), beta.end());
  Point usage(beta.size(), 0);
  Value value = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t j) {
    if (j == k) {
      visit(x, usage, value);
      return;
    }
    const Point& a = inst.columns[j];
    rec(j + 1);
    while (Dominated(a, remaining)) {
      for (std::size_t i = 0; i < a.size(); ++i) {
        remaining[i] -= a[i];
        usage[i] += a[i];
      }
      ++x[j];
      value += inst.c[j];
      rec(j + 1);
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
      remaining[i] += a[i] * x[j];
      usage[i] -= a[i] * x[j];
    }
    value -= inst.c[j] * x[j];
    x[j] = 0;
  };
  rec(0);
}

inline Value BruteForceValue(const Instance& inst, std::size_t k, std::span<const Coord> beta,
                             std::uint64_t cap = kDefaultEnumerationCap) {
  LatticeBox(inst.b).CheckedIndex(beta);
  Value best = 0;
  EnumerateFeasible(inst, k, beta, cap,
                    [&](const std::vector<Value>&, const Point&, Value v) { best = std::max(best, v); });
  return best;
}

inline std::vector<std::vector<Value>> BruteForceOptima(const Instance& inst, std::size_t k,
                                                        std::span<const Coord> beta,
                                                        std::uint64_t cap = kDefaultEnumerationCap) {
  std::vector<std::pair<std::vector<Value>, Value>> all;
  Value best = 0;
  EnumerateFeasible(inst, k, beta, cap, [&](const std::vector<Value>& x, const Point&, Value v) {
    all.emplace_back(x, v);
    best = std::max(best, v);
  });
  std::vector<std::vector<Value>> out;
  for (auto& [x, v] : all) {
    if (v == best) out.push_back(std::move(x));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Whole-box table from one enumeration at b: the best value at each exact
// usage vector, then a running maximum over the dominance order.
inline std::vector<Value> BruteForceTable(const Instance& inst, std::size_t k,
                                          std::uint64_t cap = kDefaultEnumerationCap) {
  LatticeBox box(inst.b);
  std::vector<Value> best(box.cell_count(), 0);
  EnumerateFeasible(inst, k, inst.b, cap, [&](const std::vector<Value>&, const Point& u, Value v) {
    Value& slot = best[box.Index(u)];
    slot = std::max(slot, v);
  });
  for (std::size_t axis = 0; axis < box.dim(); ++axis) {
    const std::size_t stride = box.strides()[axis];
    box.ForEach([&](std::size_t idx, const Point& beta) {
      if (beta[axis] > 0) best[idx] = std::max(best[idx], best[idx - stride]);
    });
  }
  return best;
}

}  // namespace vflat

#endif  // VFLAT_VALUE_TABLE_HPP_
