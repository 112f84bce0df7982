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

// Maximal connected level sets of z = z_n inside the box. Since
// z(beta) = z(floor(beta)), the set T(beta) is the union of the open-ceiling
// unit cells anchored at the lattice points of one equal-value component,
// so everything here works on lattice labels.

#ifndef VFLAT_MC_LEVEL_HPP_
#define VFLAT_MC_LEVEL_HPP_

#include <algorithm>
#include <cstddef>
#include <deque>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vflat/decimal.hpp"
#include "vflat/error.hpp"
#include "vflat/lattice.hpp"
#include "vflat/level_sets.hpp"
#include "vflat/solutions.hpp"
#include "vflat/value_table.hpp"

namespace vflat {

struct Component {
  std::size_t id = 0;
  Value value = 0;
  std::vector<Point> members;  // ascending lattice index
  // Members without an axis-down neighbour inside the component. By
  // monotonicity of z these are exactly the LSM members.
  std::vector<Point> minimal;
  std::vector<bool> boundary_touching;  // per axis: some member has beta_i = b_i

  bool TouchesBoundary() const {
    return std::find(boundary_touching.begin(), boundary_touching.end(), true) !=
           boundary_touching.end();
  }
};

class ComponentMap {
 public:
  static constexpr std::size_t kUnlabeled = std::numeric_limits<std::size_t>::max();

  ComponentMap() = default;
  ComponentMap(LatticeBox box, std::vector<Value> values)
      : box_(std::move(box)), values_(std::move(values)), labels_(values_.size(), kUnlabeled) {}

  const LatticeBox& box() const { return box_; }
  std::span<const Value> values() const { return values_; }
  std::size_t LabelAt(std::size_t idx) const { return labels_[idx]; }
  std::size_t Label(std::span<const Coord> p) const { return labels_[box_.CheckedIndex(p)]; }
  const std::vector<Component>& components() const { return components_; }

  const Component& component(std::size_t id) const {
    if (id >= components_.size()) {
      throw Error(ErrorKind::kInvalidInput, "no component with id " + std::to_string(id));
    }
    return components_[id];
  }

  std::vector<std::size_t>& mutable_labels() { return labels_; }
  std::vector<Component>& mutable_components() { return components_; }

 private:
  LatticeBox box_;
  std::vector<Value> values_;
  std::vector<std::size_t> labels_;
  std::vector<Component> components_;
};

namespace internal {

// Axis neighbours in the fixed order: lowest axis first, decrease before
// increase.
template <typename F>
void ForEachNeighbor(const LatticeBox& box, std::size_t idx, F&& visit) {
  for (std::size_t i = 0; i < box.dim(); ++i) {
    const Coord v = box.CoordAt(idx, i);
    if (v > 0) visit(idx - box.strides()[i]);
    if (v < box.upper()[i]) visit(idx + box.strides()[i]);
  }
}

}  // namespace internal

// Flood fill over the final table. Ids follow the smallest member index,
// so the origin always lies in component 0.
inline ComponentMap LabelComponents(const ValueStack& stack) {
  auto table = stack.table(stack.levels());
  ComponentMap map(stack.box(), std::vector<Value>(table.begin(), table.end()));
  const LatticeBox& box = map.box();
  auto& labels = map.mutable_labels();
  auto& comps = map.mutable_components();
  std::deque<std::size_t> queue;
  for (std::size_t seed = 0; seed < box.cell_count(); ++seed) {
    if (labels[seed] != ComponentMap::kUnlabeled) continue;
    const std::size_t id = comps.size();
    const Value alpha = table[seed];
    std::vector<std::size_t> cells;
    labels[seed] = id;
    queue.push_back(seed);
    while (!queue.empty()) {
      const std::size_t idx = queue.front();
      queue.pop_front();
      cells.push_back(idx);
      internal::ForEachNeighbor(box, idx, [&](std::size_t nb) {
        if (labels[nb] == ComponentMap::kUnlabeled && table[nb] == alpha) {
          labels[nb] = id;
          queue.push_back(nb);
        }
      });
    }
    std::sort(cells.begin(), cells.end());
    Component comp;
    comp.id = id;
    comp.value = alpha;
    comp.boundary_touching.assign(box.dim(), false);
    for (std::size_t idx : cells) {
      Point p = box.PointAt(idx);
      bool minimal = true;
      for (std::size_t i = 0; i < box.dim(); ++i) {
        if (p[i] == box.upper()[i]) comp.boundary_touching[i] = true;
        if (p[i] > 0 && labels[idx - box.strides()[i]] == id) minimal = false;
      }
      if (minimal) comp.minimal.push_back(p);
      comp.members.push_back(std::move(p));
    }
    comps.push_back(std::move(comp));
  }
  return map;
}

inline std::size_t ComponentOf(const ComponentMap& map, const DecimalPoint& beta) {
  if (beta.size() != map.box().dim()) {
    throw Error(ErrorKind::kInvalidInput, "point has " + std::to_string(beta.size()) +
                                              " components, expected " +
                                              std::to_string(map.box().dim()));
  }
  return map.Label(FloorPoint(beta));
}

// Shortest in-component path by breadth-first search.
inline std::vector<Point> AdjacentPath(const ComponentMap& map, std::span<const Coord> from,
                                       std::span<const Coord> to) {
  const LatticeBox& box = map.box();
  const std::size_t src = box.CheckedIndex(from);
  const std::size_t dst = box.CheckedIndex(to);
  const std::size_t id = map.LabelAt(src);
  if (map.LabelAt(dst) != id) {
    throw Error(ErrorKind::kPrecondition, "different components: " + FormatPoint(from) + " has z = " +
                                              std::to_string(map.values()[src]) + ", " +
                                              FormatPoint(to) + " has z = " +
                                              std::to_string(map.values()[dst]));
  }
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> parent(box.cell_count(), kNone);
  parent[src] = src;
  std::deque<std::size_t> queue{src};
  while (!queue.empty() && parent[dst] == kNone) {
    const std::size_t idx = queue.front();
    queue.pop_front();
    internal::ForEachNeighbor(box, idx, [&](std::size_t nb) {
      if (parent[nb] == kNone && map.LabelAt(nb) == id) {
        parent[nb] = idx;
        queue.push_back(nb);
      }
    });
  }
  std::vector<Point> path;
  for (std::size_t idx = dst; ; idx = parent[idx]) {
    path.push_back(box.PointAt(idx));
    if (idx == src) break;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

// Piecewise-linear isovalue path: a fractional head that rounds the start
// down one coordinate at a time, a lattice middle, and a fractional tail
// that raises the floor of the end point one coordinate at a time.
struct LatticePath {
  std::vector<DecimalPoint> head;  // starts at beta1, ends at floor(beta1)
  std::vector<Point> lattice;
  std::vector<DecimalPoint> tail;  // starts at floor(beta2), ends at beta2

  std::vector<DecimalPoint> Points() const {
    std::vector<DecimalPoint> out;
    auto push = [&](DecimalPoint p) {
      if (out.empty() || out.back() != p) out.push_back(std::move(p));
    };
    for (const auto& p : head) push(p);
    for (const auto& p : lattice) push(ToDecimalPoint(p));
    for (const auto& p : tail) push(p);
    return out;
  }
};

inline LatticePath IsovaluePath(const ComponentMap& map, const DecimalPoint& beta1,
                                const DecimalPoint& beta2) {
  const std::size_t id1 = ComponentOf(map, beta1);
  const std::size_t id2 = ComponentOf(map, beta2);
  if (id1 != id2) {
    throw Error(ErrorKind::kPrecondition, "different components: " + FormatDecimalPoint(beta1) +
                                              " and " + FormatDecimalPoint(beta2));
  }
  LatticePath path;
  DecimalPoint cur = beta1;
  path.head.push_back(cur);
  for (std::size_t i = 0; i < cur.size(); ++i) {
    if (cur[i].IsInteger()) continue;
    cur[i] = Decimal(cur[i].Floor());
    path.head.push_back(cur);
  }
  path.lattice = AdjacentPath(map, FloorPoint(beta1), FloorPoint(beta2));
  cur = ToDecimalPoint(FloorPoint(beta2));
  path.tail.push_back(cur);
  for (std::size_t i = 0; i < cur.size(); ++i) {
    if (cur[i] == beta2[i]) continue;
    cur[i] = beta2[i];
    path.tail.push_back(cur);
  }
  return path;
}

struct HypercubeCover {
  std::size_t id = 0;
  std::vector<Point> anchors;
  // Per anchor, the axes on which it sits on the upper face of the box,
  // where the cell G(anchor) is cut off by the box.
  std::vector<std::vector<std::size_t>> truncated_axes;
  // Hypercube anchors from the first to the last member; consecutive cubes
  // share a facet.
  std::vector<Point> certificate;
  std::string warning;
};

inline HypercubeCover ComputeHypercubeCover(const ComponentMap& map, std::size_t id) {
  const Component& comp = map.component(id);
  HypercubeCover out;
  out.id = id;
  out.anchors = comp.members;
  for (const Point& a : out.anchors) {
    std::vector<std::size_t> axes;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == map.box().upper()[i]) axes.push_back(i);
    }
    out.truncated_axes.push_back(std::move(axes));
  }
  out.certificate = AdjacentPath(map, comp.members.front(), comp.members.back());
  if (comp.TouchesBoundary()) {
    out.warning = "component meets an upper face of the box; the cover is truncated there";
  }
  return out;
}

// Two anchored unit hypercubes share an (m-1)-dimensional face iff their
// anchors differ by a signed unit vector.
inline bool HypercubesAdjacent(std::span<const Coord> a, std::span<const Coord> b) {
  Coord total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Coord d = a[i] > b[i] ? a[i] - b[i] : b[i] - a[i];
    total += d;
    if (d > 1) return false;
  }
  return total == 1;
}

struct Frontier {
  std::size_t id = 0;
  std::vector<Point> points;  // LSM members of the component
  std::size_t members_checked = 0;
  std::size_t outsiders_checked = 0;
};

// A point with the component's value belongs to it iff it dominates one of
// the component's LSM points. Both directions are asserted over the box.
inline Frontier LsmFrontier(const ComponentMap& map, const ValueStack& stack, std::size_t id) {
  const Component& comp = map.component(id);
  const LsmSet lsm = ComputeLsmSet(stack, stack.levels());
  Frontier out;
  out.id = id;
  for (const Point& p : comp.members) {
    if (lsm.Contains(p)) out.points.push_back(p);
  }
  const LatticeBox& box = map.box();
  auto dominates_frontier = [&](const Point& p) {
    return std::any_of(out.points.begin(), out.points.end(),
                       [&](const Point& f) { return Dominated(f, p); });
  };
  box.ForEach([&](std::size_t idx, const Point& p) {
    if (map.values()[idx] != comp.value) return;
    const bool member = map.LabelAt(idx) == id;
    if (member) ++out.members_checked; else ++out.outsiders_checked;
    if (member != dominates_frontier(p)) {
      throw ClaimViolation("beta in T(beta_bar) iff equal value and dominates an LSM member",
                           "component " + std::to_string(id) + ", beta=" + FormatPoint(p) +
                               (member ? " (member)" : " (outsider)"));
    }
  });
  return out;
}

struct LsmChainResult {
  std::vector<Point> points;     // distinct LSM members
  std::vector<Point> witnesses;  // witnesses[i] strictly dominates points[i], points[i+1]
};

namespace internal {

// Walks down equal-value axis steps (lowest axis first) until LSM.
inline Point DescendToLsm(const ComponentMap& map, Point p) {
  const LatticeBox& box = map.box();
  std::size_t idx = box.Index(p);
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t i = 0; i < box.dim(); ++i) {
      if (p[i] > 0 && map.values()[idx - box.strides()[i]] == map.values()[idx]) {
        --p[i];
        idx -= box.strides()[i];
        moved = true;
        break;
      }
    }
  }
  return p;
}

}  // namespace internal

// Chain of distinct LSM points between two frontier points of one
// component, each consecutive pair strictly dominated by a common member.
// Built by following an adjacent path and, at the last path point still
// dominating the current chain point, descending from its successor.
inline LsmChainResult LsmChain(const ComponentMap& map, const ValueStack& stack,
                               std::span<const Coord> from, std::span<const Coord> to) {
  const std::size_t id = map.Label(from);
  if (map.Label(to) != id) {
    throw Error(ErrorKind::kPrecondition, "chain endpoints lie in different components");
  }
  const std::size_t k = stack.levels();
  if (!IsLsm(stack, k, from) || !IsLsm(stack, k, to)) {
    throw Error(ErrorKind::kPrecondition, "chain endpoints must be level-set-minimal");
  }
  const std::vector<Point> path = AdjacentPath(map, from, to);
  LsmChainResult out;
  Point cur(from.begin(), from.end());
  const Point target(to.begin(), to.end());
  out.points.push_back(cur);
  std::size_t pos = 0;
  while (cur != target) {
    std::size_t last = pos;
    for (std::size_t i = pos; i < path.size(); ++i) {
      if (Dominated(cur, path[i])) last = i;
    }
    if (last + 1 >= path.size()) {
      throw ClaimViolation("distinct LSM points of a component are not comparable",
                           FormatPoint(cur) + " <= " + FormatPoint(target));
    }
    const Point& witness = path[last];
    Point next = internal::DescendToLsm(map, path[last + 1]);
    pos = last + 1;
    // Loop-erase: a revisited point truncates the chain back to it.
    auto seen = std::find(out.points.begin(), out.points.end(), next);
    if (seen != out.points.end()) {
      const auto keep = static_cast<std::size_t>(seen - out.points.begin());
      out.points.resize(keep + 1);
      out.witnesses.resize(keep);
    } else {
      out.witnesses.push_back(witness);
      out.points.push_back(next);
    }
    cur = next;
  }
  for (std::size_t i = 0; i + 1 < out.points.size(); ++i) {
    const Point& w = out.witnesses[i];
    if (map.Label(w) != id || !StrictlyDominated(out.points[i], w) ||
        !StrictlyDominated(out.points[i + 1], w)) {
      throw ClaimViolation("chain witness strictly dominates consecutive LSM points",
                           "witness=" + FormatPoint(w));
    }
  }
  return out;
}

struct CommonOptimum {
  Point anchor;                    // LSM member
  std::vector<Solution> optima;    // opt(anchor)
  bool truncated = false;
  std::vector<Point> region;       // members dominating the anchor
};

// Every optimum at an LSM member stays optimal at every member above it.
inline std::vector<CommonOptimum> CommonOptima(const ComponentMap& map, const ValueStack& stack,
                                               const SolutionDag& dag, std::size_t id,
                                               std::size_t cap = kDefaultOptimaCap) {
  const Component& comp = map.component(id);
  const std::size_t k = stack.levels();
  std::vector<CommonOptimum> out;
  for (const Point& anchor : comp.minimal) {
    CommonOptimum entry;
    entry.anchor = anchor;
    OptimaSet opt = AllOptima(dag, k, anchor, cap);
    entry.optima = std::move(opt.solutions);
    entry.truncated = opt.truncated;
    for (const Point& p : comp.members) {
      if (Dominated(anchor, p)) entry.region.push_back(p);
    }
    for (const Solution& s : entry.optima) {
      for (const Point& p : entry.region) {
        if (!Dominated(s.usage, p) || s.value != map.values()[map.box().Index(p)]) {
          throw ClaimViolation("optimum at an LSM member stays optimal above it",
                               "anchor=" + FormatPoint(anchor) + ", x=" + FormatSolution(s.x) +
                                   ", beta=" + FormatPoint(p));
        }
      }
    }
    out.push_back(std::move(entry));
  }
  return out;
}

struct ComponentStep {
  Point stepped;       // beta - t a_j
  Point stepped_base;  // beta_bar - t a_j
  std::size_t label = 0;
};

// beta_bar LSM with z > 0, x* optimal there, beta >= beta_bar in the same
// component, x*_j > 0, t <= x*_j: beta - t a_j and beta_bar - t a_j share a
// component. j is 0-based.
inline ComponentStep StepDownComponent(const ComponentMap& map, const ValueStack& stack,
                                       const SolutionDag& dag, std::span<const Coord> beta_bar,
                                       std::span<const Coord> beta,
                                       const std::vector<Value>& x_star, std::size_t j, Value t) {
  const std::size_t k = stack.levels();
  const LatticeBox& box = map.box();
  const std::size_t bar_idx = box.CheckedIndex(beta_bar);
  box.CheckedIndex(beta);
  if (!IsLsm(stack, k, beta_bar)) throw Error(ErrorKind::kPrecondition, "beta_bar is not level-set-minimal");
  if (map.values()[bar_idx] <= 0) throw Error(ErrorKind::kPrecondition, "z(beta_bar) must be positive");
  if (x_star.size() != k || j >= k) throw Error(ErrorKind::kPrecondition, "x* or j has the wrong size");
  const Solution s = dag.MakeSolution(x_star);
  for (Value v : x_star) {
    if (v < 0) throw Error(ErrorKind::kPrecondition, "x* has a negative entry");
  }
  if (!Dominated(s.usage, beta_bar) || s.value != map.values()[bar_idx]) {
    throw Error(ErrorKind::kPrecondition, "x* is not optimal at beta_bar");
  }
  if (map.Label(beta) != map.LabelAt(bar_idx) || !Dominated(beta_bar, beta)) {
    throw Error(ErrorKind::kPrecondition, "beta must dominate beta_bar inside its component");
  }
  if (x_star[j] <= 0 || t < 0 || t > x_star[j]) {
    throw Error(ErrorKind::kPrecondition, "need x*_j > 0 and 0 <= t <= x*_j");
  }
  ComponentStep out;
  out.stepped = Offset(beta, dag.columns()[j], -t);
  out.stepped_base = Offset(beta_bar, dag.columns()[j], -t);
  out.label = map.Label(out.stepped_base);
  if (map.Label(out.stepped) != out.label) {
    throw ClaimViolation("beta - t a_j in T(beta_bar - t a_j)",
                         "beta_bar=" + FormatPoint(beta_bar) + ", beta=" + FormatPoint(beta) +
                             ", j=" + std::to_string(j + 1) + ", t=" + std::to_string(t));
  }
  return out;
}

struct SegmentResult {
  bool declined = false;
  std::string reason;
  std::size_t label = 0;
};

// Equal value plus componentwise domination puts both points in one
// MC-level set.
inline SegmentResult SegmentCheck(const ComponentMap& map, const DecimalPoint& lower,
                                  const DecimalPoint& upper) {
  SegmentResult out;
  const std::size_t lo = ComponentOf(map, lower);
  const std::size_t hi = ComponentOf(map, upper);
  for (std::size_t i = 0; i < lower.size(); ++i) {
    if (upper[i] < lower[i]) {
      out.declined = true;
      out.reason = "upper point does not dominate lower point";
      return out;
    }
  }
  const Value zl = map.values()[map.box().Index(FloorPoint(lower))];
  const Value zu = map.values()[map.box().Index(FloorPoint(upper))];
  if (zl != zu) {
    out.declined = true;
    out.reason = "values differ (" + std::to_string(zl) + " vs " + std::to_string(zu) + ")";
    return out;
  }
  if (lo != hi) {
    throw ClaimViolation("equal value and domination imply one MC-level set",
                         FormatDecimalPoint(lower) + " vs " + FormatDecimalPoint(upper));
  }
  out.label = lo;
  return out;
}

}  // namespace vflat

#endif  // VFLAT_MC_LEVEL_HPP_
