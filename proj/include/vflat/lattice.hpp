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

#ifndef VFLAT_LATTICE_HPP_
#define VFLAT_LATTICE_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vflat/decimal.hpp"
#include "vflat/error.hpp"

namespace vflat {

using Coord = std::int64_t;
using Value = std::int64_t;
using Point = std::vector<Coord>;

inline std::string FormatPoint(std::span<const Coord> p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(p[i]);
  }
  return out + ")";
}

// Componentwise a <= b.
inline bool Dominated(std::span<const Coord> a, std::span<const Coord> b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

// a <= b and a != b.
inline bool StrictlyDominated(std::span<const Coord> a, std::span<const Coord> b) {
  bool differs = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
    if (a[i] != b[i]) differs = true;
  }
  return differs;
}

// a + scale * d
inline Point Offset(std::span<const Coord> a, std::span<const Coord> d, Coord scale = 1) {
  Point out(a.begin(), a.end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += scale * d[i];
  return out;
}

inline Point FloorPoint(const DecimalPoint& p) {
  Point out;
  out.reserve(p.size());
  for (const auto& d : p) out.push_back(d.Floor());
  return out;
}

inline DecimalPoint ToDecimalPoint(std::span<const Coord> p) {
  return DecimalPoint(p.begin(), p.end());
}

// The integer lattice {beta : 0 <= beta <= b} with colexicographic indexing:
// index(beta) = sum_i beta_i * stride_i, stride_0 = 1. Every axis step
// upward strictly increases the index, so sweeping indices in ascending
// order visits beta - a before beta for any nonnegative a != 0.
class LatticeBox {
 public:
  LatticeBox() = default;

  explicit LatticeBox(Point upper) : upper_(std::move(upper)) {
    strides_.resize(upper_.size());
    std::size_t count = 1;
    for (std::size_t i = 0; i < upper_.size(); ++i) {
      if (upper_[i] < 0) {
        throw Error(ErrorKind::kInvalidInput, "negative box bound on axis " +
                                                  std::to_string(i + 1));
      }
      strides_[i] = count;
      const auto extent = static_cast<std::size_t>(upper_[i]) + 1;
      if (extent == 0 || __builtin_mul_overflow(count, extent, &count) ||
          count > static_cast<std::size_t>(INT64_MAX)) {
        throw Error(ErrorKind::kOverflow,
                    "lattice cell count overflows 64 bits for b = " + FormatPoint(upper_));
      }
    }
    cell_count_ = count;
  }

  std::size_t dim() const { return upper_.size(); }
  const Point& upper() const { return upper_; }
  std::size_t cell_count() const { return cell_count_; }
  std::span<const std::size_t> strides() const { return strides_; }

  bool Contains(std::span<const Coord> p) const {
    if (p.size() != upper_.size()) return false;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] < 0 || p[i] > upper_[i]) return false;
    }
    return true;
  }

  std::size_t Index(std::span<const Coord> p) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      idx += static_cast<std::size_t>(p[i]) * strides_[i];
    }
    return idx;
  }

  std::size_t CheckedIndex(std::span<const Coord> p) const {
    if (!Contains(p)) {
      throw Error(ErrorKind::kOutOfBox, "point " + FormatPoint(p) +
                                            " outside box [0, " + FormatPoint(upper_) + "]");
    }
    return Index(p);
  }

  Coord CoordAt(std::size_t idx, std::size_t axis) const {
    return static_cast<Coord>((idx / strides_[axis]) %
                              (static_cast<std::size_t>(upper_[axis]) + 1));
  }

  Point PointAt(std::size_t idx) const {
    Point p(upper_.size());
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = CoordAt(idx, i);
    return p;
  }

  // Visits every cell in ascending index order; the callback receives the
  // index and the coordinates maintained by an odometer.
  template <typename F>
  void ForEach(F&& visit) const {
    Point p(upper_.size(), 0);
    for (std::size_t idx = 0; idx < cell_count_; ++idx) {
      visit(idx, std::as_const(p));
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < upper_[i]) {
          ++p[i];
          break;
        }
        p[i] = 0;
      }
    }
  }

  // Visits every lattice point q with lower <= q <= upper (both in the box).
  template <typename F>
  void ForEachInRange(std::span<const Coord> lower, std::span<const Coord> upper,
                      F&& visit) const {
    for (std::size_t i = 0; i < lower.size(); ++i) {
      if (lower[i] > upper[i]) return;
    }
    Point p(lower.begin(), lower.end());
    while (true) {
      visit(Index(p), std::as_const(p));
      std::size_t i = 0;
      for (; i < p.size(); ++i) {
        if (p[i] < upper[i]) {
          ++p[i];
          break;
        }
        p[i] = lower[i];
      }
      if (i == p.size()) return;
    }
  }

  friend bool operator==(const LatticeBox& a, const LatticeBox& b) {
    return a.upper_ == b.upper_;
  }

 private:
  Point upper_;
  std::vector<std::size_t> strides_;
  std::size_t cell_count_ = 1;
};

}  // namespace vflat

#endif  // VFLAT_LATTICE_HPP_
