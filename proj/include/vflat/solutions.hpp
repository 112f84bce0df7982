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

#ifndef VFLAT_SOLUTIONS_HPP_
#define VFLAT_SOLUTIONS_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vflat/error.hpp"
#include "vflat/instance.hpp"
#include "vflat/lattice.hpp"
#include "vflat/value_table.hpp"

namespace vflat {

struct Solution {
  std::vector<Value> x;  // x[j] multiplies column j (0-based), size k
  Value value = 0;
  Point usage;           // sum_j a_j x_j

  friend bool operator==(const Solution&, const Solution&) = default;
};

inline Solution MakeSolution(const Instance& inst, std::vector<Value> x) {
  if (x.size() > inst.n()) {
    throw Error(ErrorKind::kInvalidInput, "solution has more entries than columns");
  }
  Solution s;
  s.usage.assign(inst.m(), 0);
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j] < 0) throw Error(ErrorKind::kInvalidInput, "negative solution entry");
    s.value += inst.c[j] * x[j];
    for (std::size_t i = 0; i < inst.m(); ++i) s.usage[i] += inst.columns[j][i] * x[j];
  }
  s.x = std::move(x);
  return s;
}

// "x = (0,1,1)"-style rendering with 1-based unit vectors when sparse.
inline std::string FormatSolution(const std::vector<Value>& x) {
  std::string out = "(";
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (j > 0) out += ",";
    out += std::to_string(x[j]);
  }
  return out + ")";
}

// Two flag bits per (level, cell):
//   skip: z_k(beta) == z_{k-1}(beta)        -> some optimum has x_k = 0
//   take: beta >= a_k and z_k(beta) == z_k(beta - a_k) + c_k
//                                           -> some optimum has x_k >= 1
// Each root-to-base walk spells exactly one optimal vector, and distinct
// walks spell distinct vectors.
class SolutionDag {
 public:
  static constexpr std::uint8_t kSkip = 1;
  static constexpr std::uint8_t kTake = 2;

  SolutionDag() = default;

  SolutionDag(const Instance& inst, const ValueStack& stack)
      : box_(stack.box()), columns_(inst.columns), c_(inst.c) {
    stack.RequireAllLevels();
    const std::size_t cells = box_.cell_count();
    flags_.assign((inst.n() + 1) * cells, 0);
    for (const auto& a : columns_) offsets_.push_back(box_.Index(a));
    for (std::size_t k = 1; k <= inst.n(); ++k) {
      auto cur = stack.table(k);
      auto prev = stack.table(k - 1);
      const Point& a = columns_[k - 1];
      box_.ForEach([&](std::size_t idx, const Point& beta) {
        std::uint8_t f = 0;
        if (cur[idx] == prev[idx]) f |= kSkip;
        if (Dominated(a, beta) && cur[idx] == cur[idx - offsets_[k - 1]] + c_[k - 1]) f |= kTake;
        flags_[k * cells + idx] = f;
      });
    }
  }

  const LatticeBox& box() const { return box_; }
  std::size_t levels() const { return columns_.size(); }
  const std::vector<Point>& columns() const { return columns_; }
  const std::vector<Value>& c() const { return c_; }
  std::size_t offset(std::size_t j) const { return offsets_[j]; }

  bool Skip(std::size_t k, std::size_t idx) const {
    return flags_[k * box_.cell_count() + idx] & kSkip;
  }
  bool Take(std::size_t k, std::size_t idx) const {
    return flags_[k * box_.cell_count() + idx] & kTake;
  }

  Solution MakeSolution(std::vector<Value> x) const {
    Solution s;
    s.usage.assign(box_.dim(), 0);
    for (std::size_t j = 0; j < x.size(); ++j) {
      s.value += c_[j] * x[j];
      for (std::size_t i = 0; i < s.usage.size(); ++i) s.usage[i] += columns_[j][i] * x[j];
    }
    s.x = std::move(x);
    return s;
  }

  void RequireLevel(std::size_t k) const {
    if (k > levels()) {
      throw Error(ErrorKind::kNotRetained, "k not retained: level " + std::to_string(k) +
                                               " exceeds n = " + std::to_string(levels()));
    }
  }

 private:
  LatticeBox box_;
  std::vector<Point> columns_;
  std::vector<Value> c_;
  std::vector<std::size_t> offsets_;
  std::vector<std::uint8_t> flags_;
};

// Deterministic member of opt_k(beta): at each level take a_k as many
// times as the DAG allows, then drop to the previous level.
inline Solution OneOptimum(const SolutionDag& dag, std::size_t k, std::span<const Coord> beta) {
  dag.RequireLevel(k);
  std::size_t idx = dag.box().CheckedIndex(beta);
  std::vector<Value> x(k, 0);
  std::size_t level = k;
  while (level > 0) {
    if (dag.Take(level, idx)) {
      ++x[level - 1];
      idx -= dag.offset(level - 1);
    } else if (dag.Skip(level, idx)) {
      --level;
    } else {
      throw Error(ErrorKind::kInternal, "solution DAG has no edge at level " +
                                            std::to_string(level) + ", beta = " +
                                            FormatPoint(dag.box().PointAt(idx)));
    }
  }
  return dag.MakeSolution(std::move(x));
}

struct OptimaSet {
  std::vector<Solution> solutions;
  bool truncated = false;  // more than `cap` optima exist
};

inline constexpr std::size_t kDefaultOptimaCap = 10'000;

// Exhaustive walk of the DAG, take edges first, so solutions[0] equals
// OneOptimum. Stops once cap + 1 optima would be needed.
inline OptimaSet AllOptima(const SolutionDag& dag, std::size_t k, std::span<const Coord> beta,
                           std::size_t cap = kDefaultOptimaCap) {
  dag.RequireLevel(k);
  const std::size_t root = dag.box().CheckedIndex(beta);
  OptimaSet out;
  std::vector<Value> x(k, 0);
  // Explicit stack of (level, idx, stage); stage 0 = try take, 1 = try skip.
  struct Frame {
    std::size_t level;
    std::size_t idx;
    int stage;
  };
  std::vector<Frame> frames{{k, root, 0}};
  while (!frames.empty()) {
    Frame& f = frames.back();
    if (f.level == 0) {
      if (out.solutions.size() == cap) {
        out.truncated = true;
        return out;
      }
      out.solutions.push_back(dag.MakeSolution(x));
      frames.pop_back();
      continue;
    }
    if (f.stage == 0) {
      f.stage = 1;
      if (dag.Take(f.level, f.idx)) {
        ++x[f.level - 1];
        frames.push_back({f.level, f.idx - dag.offset(f.level - 1), 0});
      }
      continue;
    }
    if (f.stage == 1) {
      f.stage = 2;
      // Undo the take made from this frame, if any: the child returned.
      if (dag.Take(f.level, f.idx)) --x[f.level - 1];
      if (dag.Skip(f.level, f.idx)) frames.push_back({f.level - 1, f.idx, 0});
      continue;
    }
    frames.pop_back();
  }
  return out;
}

// For every cell, whether some member of opt_k(beta) has x_j > 0 (j 0-based,
// j < k). Exact: one pass per level over the DAG, no enumeration.
inline std::vector<bool> ColumnUsage(const SolutionDag& dag, std::size_t k, std::size_t j) {
  dag.RequireLevel(k);
  const std::size_t cells = dag.box().cell_count();
  std::vector<bool> prev(cells, false), cur(cells, false);
  for (std::size_t level = j + 1; level <= k; ++level) {
    const std::size_t off = dag.offset(level - 1);
    for (std::size_t idx = 0; idx < cells; ++idx) {
      bool uses = dag.Skip(level, idx) && prev[idx];
      if (!uses && dag.Take(level, idx)) uses = (level - 1 == j) || cur[idx - off];
      cur[idx] = uses;
    }
    prev.swap(cur);
  }
  return prev;
}

namespace internal {

inline void RequireOptimal(const Instance& inst, const ValueStack& stack, std::size_t k,
                           std::span<const Coord> beta, const std::vector<Value>& x_star,
                           Solution* out) {
  if (x_star.size() != k) {
    throw Error(ErrorKind::kPrecondition, "solution has " + std::to_string(x_star.size()) +
                                              " entries, expected k = " + std::to_string(k));
  }
  Solution s = MakeSolution(inst, x_star);
  if (!Dominated(s.usage, beta)) {
    throw Error(ErrorKind::kPrecondition, "x* = " + FormatSolution(x_star) +
                                              " is infeasible at beta = " + FormatPoint(beta));
  }
  if (s.value != stack.At(k, beta)) {
    throw Error(ErrorKind::kPrecondition, "x* = " + FormatSolution(x_star) +
                                              " is not optimal at beta = " + FormatPoint(beta));
  }
  *out = std::move(s);
}

}  // namespace internal

struct DecompositionReport {
  Point partial_usage;      // sum a_j x_j
  Value partial_value = 0;  // sum c_j x_j
  Value z_partial = 0;      // z_k(partial_usage)
  Value z_residual = 0;     // z_k(beta - partial_usage)
  Value z_beta = 0;
};

// IP complementary slackness for x <= x* with x* in opt_k(beta):
//   z_k(Ax) = cx  and  z_k(Ax) + z_k(beta - Ax) = z_k(beta).
inline DecompositionReport Decompose(const Instance& inst, const ValueStack& stack, std::size_t k,
                                     std::span<const Coord> beta,
                                     const std::vector<Value>& x_star,
                                     const std::vector<Value>& x) {
  Solution star;
  internal::RequireOptimal(inst, stack, k, beta, x_star, &star);
  if (x.size() != k) throw Error(ErrorKind::kPrecondition, "x must have k entries");
  for (std::size_t j = 0; j < k; ++j) {
    if (x[j] < 0 || x[j] > x_star[j]) {
      throw Error(ErrorKind::kPrecondition,
                  "x = " + FormatSolution(x) + " is not below x* = " + FormatSolution(x_star));
    }
  }
  Solution part = MakeSolution(inst, x);
  DecompositionReport r;
  r.partial_usage = part.usage;
  r.partial_value = part.value;
  r.z_partial = stack.At(k, part.usage);
  r.z_residual = stack.At(k, Offset(beta, part.usage, -1));
  r.z_beta = stack.At(k, beta);
  const std::string witness = "k=" + std::to_string(k) + ", beta=" + FormatPoint(beta) +
                              ", x*=" + FormatSolution(x_star) + ", x=" + FormatSolution(x);
  if (r.z_partial != r.partial_value) {
    throw ClaimViolation("z_k(Ax) = cx", witness);
  }
  if (r.z_partial + r.z_residual != r.z_beta) {
    throw ClaimViolation("z_k(Ax) + z_k(beta - Ax) = z_k(beta)", witness);
  }
  return r;
}

struct StepDownResult {
  Point point;        // beta - t a_k
  Value value = 0;    // z_k(beta) - t c_k
  Point base;         // beta - x*_k a_k
  Value base_value = 0;  // z_{k-1}(base) = z_k(beta) - c_k x*_k
};

// Removing t copies of a_k from an optimal solution stays optimal, and
// stripping all of them lands in the level set of z_{k-1}.
inline StepDownResult StepDown(const Instance& inst, const ValueStack& stack, std::size_t k,
                               std::span<const Coord> beta, const std::vector<Value>& x_star,
                               Value t) {
  if (k == 0) throw Error(ErrorKind::kPrecondition, "step down needs k >= 1");
  stack.RequireAllLevels();
  Solution star;
  internal::RequireOptimal(inst, stack, k, beta, x_star, &star);
  if (t < 0 || t > x_star[k - 1]) {
    throw Error(ErrorKind::kPrecondition, "t = " + std::to_string(t) + " outside [0, x*_k = " +
                                              std::to_string(x_star[k - 1]) + "]");
  }
  const Point& a = inst.columns[k - 1];
  const Value c = inst.c[k - 1];
  const Value alpha = stack.At(k, beta);
  StepDownResult r;
  r.point = Offset(beta, a, -t);
  r.value = alpha - t * c;
  r.base = Offset(beta, a, -x_star[k - 1]);
  r.base_value = alpha - c * x_star[k - 1];
  const std::string witness = "k=" + std::to_string(k) + ", beta=" + FormatPoint(beta) +
                              ", x*=" + FormatSolution(x_star) + ", t=" + std::to_string(t);
  if (stack.At(k, r.point) != r.value) throw ClaimViolation("z_k(beta - t a_k) = z_k(beta) - t c_k", witness);
  if (stack.At(k, r.point) + stack.At(k, Offset(Point(a.size(), 0), a, t)) != alpha) {
    throw ClaimViolation("z_k(beta) = z_k(beta - t a_k) + z_k(t a_k)", witness);
  }
  std::vector<Value> reduced = x_star;
  reduced[k - 1] -= t;
  Solution rs = MakeSolution(inst, reduced);
  if (!Dominated(rs.usage, r.point) || rs.value != stack.At(k, r.point)) {
    throw ClaimViolation("x* - t e_k optimal at beta - t a_k", witness);
  }
  if (stack.At(k - 1, r.base) != r.base_value) {
    throw ClaimViolation("beta - x*_k a_k in S_{k-1}(alpha - c_k x*_k)", witness);
  }
  return r;
}

}  // namespace vflat

#endif  // VFLAT_SOLUTIONS_HPP_
