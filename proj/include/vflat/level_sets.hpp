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

// Level sets S_k(alpha) = {beta : z_k(beta) = alpha} and level-set-minimal
// (LSM) vectors: lattice points where every unit decrease strictly lowers
// z_k. B_k below denotes the LSM set of z_k.

#ifndef VFLAT_LEVEL_SETS_HPP_
#define VFLAT_LEVEL_SETS_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vflat/error.hpp"
#include "vflat/instance.hpp"
#include "vflat/lattice.hpp"
#include "vflat/solutions.hpp"
#include "vflat/value_table.hpp"

namespace vflat {

struct LevelSet {
  std::size_t k = 0;
  Value alpha = 0;
  std::vector<Point> members;  // ascending lattice index
};

inline LevelSet ComputeLevelSet(const ValueStack& stack, std::size_t k, Value alpha) {
  auto t = stack.table(k);
  LevelSet out{k, alpha, {}};
  stack.box().ForEach([&](std::size_t idx, const Point& beta) {
    if (t[idx] == alpha) out.members.push_back(beta);
  });
  return out;
}

namespace internal {

inline bool IsLsmAt(const LatticeBox& box, std::span<const Value> table, std::size_t idx) {
  for (std::size_t i = 0; i < box.dim(); ++i) {
    if (box.CoordAt(idx, i) == 0) continue;
    if (table[idx - box.strides()[i]] >= table[idx]) return false;
  }
  return true;
}

}  // namespace internal

inline bool IsLsm(const ValueStack& stack, std::size_t k, std::span<const Coord> beta) {
  auto t = stack.table(k);
  return internal::IsLsmAt(stack.box(), t, stack.box().CheckedIndex(beta));
}

// Bitset over the lattice indexing.
class LsmSet {
 public:
  LsmSet() = default;
  LsmSet(LatticeBox box, std::size_t k, std::vector<bool> bits)
      : box_(std::move(box)), k_(k), bits_(std::move(bits)) {}

  std::size_t k() const { return k_; }
  const LatticeBox& box() const { return box_; }
  bool ContainsIndex(std::size_t idx) const { return bits_[idx]; }
  bool Contains(std::span<const Coord> p) const {
    return box_.Contains(p) && bits_[box_.Index(p)];
  }
  std::size_t size() const { return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true)); }
  bool Saturated() const { return size() == bits_.size(); }

  std::vector<Point> Members() const {
    std::vector<Point> out;
    for (std::size_t idx = 0; idx < bits_.size(); ++idx) {
      if (bits_[idx]) out.push_back(box_.PointAt(idx));
    }
    return out;
  }

  friend bool operator==(const LsmSet& a, const LsmSet& b) { return a.bits_ == b.bits_; }

 private:
  LatticeBox box_;
  std::size_t k_ = 0;
  std::vector<bool> bits_;
};

inline LsmSet ComputeLsmSet(const ValueStack& stack, std::size_t k) {
  auto t = stack.table(k);
  const LatticeBox& box = stack.box();
  std::vector<bool> bits(box.cell_count());
  for (std::size_t idx = 0; idx < bits.size(); ++idx) bits[idx] = internal::IsLsmAt(box, t, idx);
  return LsmSet(box, k, std::move(bits));
}

// Exact rank of a list of integer vectors by fraction-free (Bareiss)
// elimination.
inline std::size_t ExactRank(const std::vector<Point>& vectors) {
  if (vectors.empty()) return 0;
  const std::size_t rows = vectors.size();
  const std::size_t cols = vectors[0].size();
  std::vector<std::vector<__int128>> mat(rows, std::vector<__int128>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) mat[r][c] = vectors[r][c];
  }
  std::size_t rank = 0;
  __int128 prev = 1;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && mat[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(mat[pivot], mat[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t c = col + 1; c < cols; ++c) {
        __int128 lhs, rhs, diff;
        if (__builtin_mul_overflow(mat[rank][col], mat[r][c], &lhs) ||
            __builtin_mul_overflow(mat[r][col], mat[rank][c], &rhs) ||
            __builtin_sub_overflow(lhs, rhs, &diff)) {
          throw Error(ErrorKind::kOverflow, "rank computation overflow");
        }
        mat[r][c] = diff / prev;
      }
      mat[r][col] = 0;
    }
    prev = mat[rank][col];
    ++rank;
  }
  return rank;
}

struct PersistenceCheck {
  bool premise_holds = false;
  // Points strictly below beta where some optimum uses column k; first
  // entry is paired with such an optimum.
  std::vector<Point> witnesses;
  std::optional<Solution> witness_solution;
  bool membership_asserted = false;
};

// For beta in B_{k-1}: if no optimum at any point strictly below beta uses
// column k, then beta is in B_k. The premise is read off the take flags,
// which mark exactly the cells where some optimum has x_k >= 1.
inline PersistenceCheck CheckLsmPersistence(const ValueStack& stack, const SolutionDag& dag,
                                            std::size_t k, std::span<const Coord> beta) {
  if (k == 0) throw Error(ErrorKind::kPrecondition, "persistence needs k >= 1");
  if (!IsLsm(stack, k - 1, beta)) {
    throw Error(ErrorKind::kPrecondition,
                "beta = " + FormatPoint(beta) + " is not level-set-minimal at level " +
                    std::to_string(k - 1));
  }
  const LatticeBox& box = stack.box();
  PersistenceCheck out;
  const Point origin(box.dim(), 0);
  const std::size_t self = box.Index(beta);
  box.ForEachInRange(origin, beta, [&](std::size_t idx, const Point& p) {
    if (idx == self) return;
    if (dag.Take(k, idx)) out.witnesses.push_back(p);
  });
  out.premise_holds = out.witnesses.empty();
  if (!out.premise_holds) {
    out.witness_solution = OneOptimum(dag, k, out.witnesses.front());
  } else {
    if (!IsLsm(stack, k, beta)) {
      throw ClaimViolation("no optimum below beta uses x_k => beta in B_k",
                           "k=" + std::to_string(k) + ", beta=" + FormatPoint(beta));
    }
    out.membership_asserted = true;
  }
  return out;
}

struct RayExclusion {
  bool declined = false;
  std::string reason;
  std::vector<Point> excluded;  // beta + t a_k in the box, none in B_k
};

enum class RayHypothesis {
  // beta not in B_{k-1}, a_1..a_k independent, beta and a_k independent.
  // Refutable: a_1 = (1,1), a_2 = (2,1), beta = (0,1) gives
  // beta + a_2 = 2 a_1 in B_2.
  kStated,
  // Additionally beta lies in span(a_1..a_{k-1}) or outside
  // span(a_1..a_k), so that writing beta + t a_k in the basis forces the
  // a_k coefficient to be t.
  kSpanRestricted,
};

// Under the chosen hypothesis, no beta + t a_k is in B_k.
inline RayExclusion LsmRayExclusion(const Instance& inst, const ValueStack& stack, std::size_t k,
                                    std::span<const Coord> beta,
                                    RayHypothesis hypothesis = RayHypothesis::kStated) {
  if (k == 0 || k > inst.n()) throw Error(ErrorKind::kPrecondition, "ray exclusion needs 1 <= k <= n");
  stack.box().CheckedIndex(beta);
  RayExclusion out;
  if (IsLsm(stack, k - 1, beta)) {
    out.declined = true;
    out.reason = "beta is level-set-minimal at level k-1";
    return out;
  }
  const std::vector<Point> prefix(inst.columns.begin(),
                                  inst.columns.begin() + static_cast<std::ptrdiff_t>(k));
  if (k > inst.m() || ExactRank(prefix) < k) {
    out.declined = true;
    out.reason = "columns a_1..a_k are linearly dependent";
    return out;
  }
  const Point& a = inst.columns[k - 1];
  if (ExactRank({Point(beta.begin(), beta.end()), a}) < 2) {
    out.declined = true;
    out.reason = "beta and a_k are linearly dependent";
    return out;
  }
  if (hypothesis == RayHypothesis::kSpanRestricted) {
    std::vector<Point> with_beta(prefix.begin(), prefix.end() - 1);
    with_beta.emplace_back(beta.begin(), beta.end());
    const bool in_lower = ExactRank(with_beta) == k - 1;
    with_beta.push_back(a);
    const bool in_full = ExactRank(with_beta) == k;
    if (in_full && !in_lower) {
      out.declined = true;
      out.reason = "beta has a nonzero a_k coordinate in span(a_1..a_k)";
      return out;
    }
  }
  Point p(beta.begin(), beta.end());
  while (stack.box().Contains(p)) {
    if (IsLsm(stack, k, p)) {
      throw ClaimViolation("ray beta + t a_k excluded from B_k",
                           "k=" + std::to_string(k) + ", beta=" + FormatPoint(beta) +
                               ", point=" + FormatPoint(p));
    }
    out.excluded.push_back(p);
    p = Offset(p, a);
  }
  return out;
}

// For beta in B_k and x* = OneOptimum(k, beta): beta - x*_k a_k is in B_{k-1}.
inline Point LsmStepDown(const ValueStack& stack, const SolutionDag& dag, std::size_t k,
                         std::span<const Coord> beta) {
  if (k == 0) throw Error(ErrorKind::kPrecondition, "step down needs k >= 1");
  if (!IsLsm(stack, k, beta)) {
    throw Error(ErrorKind::kPrecondition,
                "beta = " + FormatPoint(beta) + " is not in B_" + std::to_string(k));
  }
  const Solution x = OneOptimum(dag, k, beta);
  Point out = Offset(beta, dag.columns()[k - 1], -x.x[k - 1]);
  if (!IsLsm(stack, k - 1, out)) {
    throw ClaimViolation("beta - x*_k a_k in B_{k-1}",
                         "k=" + std::to_string(k) + ", beta=" + FormatPoint(beta) +
                             ", x*=" + FormatSolution(x.x));
  }
  return out;
}

// With x* optimal at its own usage and that usage in B_k, every partial
// usage Ax with x strictly below x* is again in B_k.
inline std::vector<Point> LsmDownwardClosure(const ValueStack& stack, const SolutionDag& dag,
                                             std::size_t k, const std::vector<Value>& x_star,
                                             std::uint64_t cap = kDefaultEnumerationCap) {
  if (x_star.size() != k) throw Error(ErrorKind::kPrecondition, "x* must have k entries");
  const Solution star = dag.MakeSolution(x_star);
  const LatticeBox& box = stack.box();
  if (!box.Contains(star.usage)) {
    throw Error(ErrorKind::kPrecondition, "usage of x* lies outside the box");
  }
  if (star.value != stack.At(k, star.usage)) {
    throw Error(ErrorKind::kPrecondition, "x* is not optimal at its own usage");
  }
  if (!IsLsm(stack, k, star.usage)) {
    throw Error(ErrorKind::kPrecondition, "usage of x* is not in B_k");
  }
  std::uint64_t count = 1;
  for (Value v : x_star) {
    if (__builtin_mul_overflow(count, static_cast<std::uint64_t>(v) + 1, &count) || count > cap) {
      throw Error(ErrorKind::kCapExceeded, "too many vectors below x*");
    }
  }
  std::vector<bool> seen(box.cell_count(), false);
  std::vector<Value> x(k, 0);
  while (true) {
    if (x != x_star) {
      const Point u = dag.MakeSolution(x).usage;
      const std::size_t idx = box.Index(u);
      if (!seen[idx]) {
        seen[idx] = true;
        if (!IsLsm(stack, k, u)) {
          throw ClaimViolation("partial usage of x* in B_k",
                               "k=" + std::to_string(k) + ", x*=" + FormatSolution(x_star) +
                                   ", x=" + FormatSolution(x));
        }
      }
    }
    std::size_t j = 0;
    for (; j < k; ++j) {
      if (x[j] < x_star[j]) {
        ++x[j];
        break;
      }
      x[j] = 0;
    }
    if (j == k) break;
  }
  std::vector<Point> out;
  for (std::size_t idx = 0; idx < seen.size(); ++idx) {
    if (seen[idx]) out.push_back(box.PointAt(idx));
  }
  return out;
}

struct RayPrefix {
  bool declined = false;
  std::string reason;
  std::vector<Point> asserted;  // beta + s a_k for s = 0..t
};

// beta + t a_k in B_k with z_k(beta + t a_k) = z_k(beta) + t c_k implies
// beta + s a_k in B_k for every s <= t.
inline RayPrefix LsmRayPrefix(const Instance& inst, const ValueStack& stack, std::size_t k,
                              std::span<const Coord> beta, Value t) {
  if (k == 0 || k > inst.n()) throw Error(ErrorKind::kPrecondition, "ray prefix needs 1 <= k <= n");
  if (t < 0) throw Error(ErrorKind::kPrecondition, "t must be nonnegative");
  stack.box().CheckedIndex(beta);
  const Point& a = inst.columns[k - 1];
  const Point end = Offset(beta, a, t);
  RayPrefix out;
  if (!stack.box().Contains(end)) {
    out.declined = true;
    out.reason = "beta + t a_k outside the box";
    return out;
  }
  if (!IsLsm(stack, k, end)) {
    out.declined = true;
    out.reason = "beta + t a_k not in B_k";
    return out;
  }
  if (stack.At(k, end) != stack.At(k, beta) + t * inst.c[k - 1]) {
    out.declined = true;
    out.reason = "z_k(beta + t a_k) != z_k(beta) + t c_k";
    return out;
  }
  for (Value s = 0; s <= t; ++s) {
    Point p = Offset(beta, a, s);
    if (!IsLsm(stack, k, p)) {
      throw ClaimViolation("beta + s a_k in B_k for s <= t",
                           "k=" + std::to_string(k) + ", beta=" + FormatPoint(beta) +
                               ", t=" + std::to_string(t) + ", s=" + std::to_string(s));
    }
    out.asserted.push_back(std::move(p));
  }
  return out;
}

struct CoverWitness {
  Point beta;
  Point base;  // in B_{k-1}
  Value t = 0;
};

struct RecursiveCover {
  bool holds = true;
  std::vector<CoverWitness> witnesses;
  std::optional<Point> counterexample;
};

// Every member of B_k decomposes as base + t a_k with base in B_{k-1}.
inline RecursiveCover RelationshipCover(const ValueStack& stack, const SolutionDag& dag,
                                        std::size_t k) {
  if (k == 0 || k > dag.levels()) throw Error(ErrorKind::kPrecondition, "cover needs 1 <= k <= n");
  const LsmSet current = ComputeLsmSet(stack, k);
  const LsmSet previous = ComputeLsmSet(stack, k - 1);
  const Point& a = dag.columns()[k - 1];
  RecursiveCover out;
  stack.box().ForEach([&](std::size_t idx, const Point& beta) {
    if (!current.ContainsIndex(idx)) return;
    Point base = beta;
    for (Value t = 0; Dominated(Point(base.size(), 0), base); ++t) {
      if (previous.Contains(base)) {
        out.witnesses.push_back({beta, base, t});
        return;
      }
      base = Offset(base, a, -1);
    }
    if (out.holds) out.counterexample = beta;
    out.holds = false;
  });
  return out;
}

struct SaturationResult {
  std::optional<std::size_t> first;  // smallest k with B_k = whole lattice
  bool persists = true;              // every later level saturates as well
  std::optional<std::size_t> broken_at;
};

inline SaturationResult LsmSaturation(const ValueStack& stack) {
  stack.RequireAllLevels();
  SaturationResult out;
  for (std::size_t k = 0; k <= stack.levels(); ++k) {
    const bool full = ComputeLsmSet(stack, k).Saturated();
    if (full && !out.first) out.first = k;
    if (!full && out.first && out.persists) {
      out.persists = false;
      out.broken_at = k;
    }
  }
  return out;
}

struct UnusedColumnReport {
  std::vector<std::size_t> excluded_columns;  // 0-based j with a_j not in B_k
  std::size_t points_examined = 0;
  bool holds = true;
  std::optional<Point> witness_beta;
  std::optional<std::size_t> witness_column;
};

// At LSM points of z_k no optimum uses a column that is not itself LSM.
inline UnusedColumnReport UnusedColumnFilter(const ValueStack& stack, const SolutionDag& dag,
                                             std::size_t k) {
  stack.RequireAllLevels();
  const LsmSet lsm = ComputeLsmSet(stack, k);
  UnusedColumnReport out;
  for (std::size_t j = 0; j < k; ++j) {
    if (!lsm.Contains(dag.columns()[j])) out.excluded_columns.push_back(j);
  }
  std::vector<std::vector<bool>> usage;
  for (std::size_t j : out.excluded_columns) usage.push_back(ColumnUsage(dag, k, j));
  for (std::size_t idx = 0; idx < stack.box().cell_count(); ++idx) {
    if (!lsm.ContainsIndex(idx)) continue;
    ++out.points_examined;
    for (std::size_t e = 0; e < usage.size(); ++e) {
      if (usage[e][idx] && out.holds) {
        out.holds = false;
        out.witness_beta = stack.box().PointAt(idx);
        out.witness_column = out.excluded_columns[e];
      }
    }
  }
  return out;
}

}  // namespace vflat

#endif  // VFLAT_LEVEL_SETS_HPP_
