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

// Executable checks of the structural results on value functions, level
// sets and MC-level sets. Each check either passes, fails with a witness,
// or declines (a truncated optima set or an enumeration cap never
// certifies a statement quantified over all optima).

#ifndef VFLAT_VERIFY_HPP_
#define VFLAT_VERIFY_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "vflat/columns.hpp"
#include "vflat/error.hpp"
#include "vflat/instance.hpp"
#include "vflat/level_sets.hpp"
#include "vflat/mc_level.hpp"
#include "vflat/solutions.hpp"
#include "vflat/value_table.hpp"

namespace vflat {

struct Config {
  std::size_t optima_cap = kDefaultOptimaCap;
  std::uint64_t enumeration_cap = kDefaultEnumerationCap;
  std::uint64_t pair_budget = 1'000'000;
  std::uint64_t seed = 0;
};

// Everything the checks read. Built once with every level retained.
struct Analysis {
  Instance instance;
  ValueStack stack;
  SolutionDag dag;
  ComponentMap components;

  static Analysis FromStack(Instance inst, ValueStack stack) {
    stack.RequireAllLevels();
    Analysis a;
    a.instance = std::move(inst);
    a.stack = std::move(stack);
    a.dag = SolutionDag(a.instance, a.stack);
    a.components = LabelComponents(a.stack);
    return a;
  }

  static Analysis Build(Instance inst) {
    ValueStack stack = BuildStack(inst, Retention::kAllLevels);
    return FromStack(std::move(inst), std::move(stack));
  }
};

enum class Status { kPass, kFail, kDeclined };

inline std::string_view StatusName(Status s) {
  switch (s) {
    case Status::kPass: return "PASS";
    case Status::kFail: return "FAIL";
    case Status::kDeclined: return "DECLINED";
  }
  return "?";
}

struct CheckEntry {
  std::string id;
  std::string statement;
  Status status = Status::kPass;
  bool sampled = false;
  std::uint64_t examined = 0;
  std::vector<std::uint64_t> per_level;  // optional breakdown by k
  std::string witness;                   // set on FAIL
  std::string reason;                    // set on DECLINED
  std::string note;
};

struct Report {
  std::string instance_name;
  Point b;
  std::size_t m = 0;
  std::size_t n = 0;
  Config config;
  std::vector<CheckEntry> entries;

  std::size_t Count(Status s) const {
    return static_cast<std::size_t>(std::count_if(
        entries.begin(), entries.end(), [s](const CheckEntry& e) { return e.status == s; }));
  }
  bool Failed() const { return Count(Status::kFail) > 0; }

  std::string ToText() const;
  nlohmann::ordered_json ToJson() const;
};

namespace internal {

// Records progress of one check. A decline reason is kept but does not
// stop the check: a later refutation still turns it into a FAIL.
class Tally {
 public:
  explicit Tally(CheckEntry& entry) : entry_(entry) {}

  void Examine(std::uint64_t count = 1) { entry_.examined += count; }
  void ExamineLevel(std::size_t k, std::uint64_t count = 1) {
    if (entry_.per_level.size() <= k) entry_.per_level.resize(k + 1, 0);
    entry_.per_level[k] += count;
    entry_.examined += count;
  }
  void Decline(const std::string& reason) {
    if (entry_.reason.empty()) entry_.reason = reason;
  }
  void Note(const std::string& note) { entry_.note = note; }
  void Sampled() { entry_.sampled = true; }

 private:
  CheckEntry& entry_;
};

inline std::string At(std::size_t k, std::span<const Coord> beta) {
  return "k=" + std::to_string(k) + ", beta=" + FormatPoint(beta);
}

// All optima at (k, beta); notes truncation on the tally.
inline OptimaSet OptimaFor(const Analysis& a, const Config& cfg, Tally& tally, std::size_t k,
                           std::span<const Coord> beta) {
  OptimaSet opt = AllOptima(a.dag, k, beta, cfg.optima_cap);
  if (opt.truncated) {
    tally.Decline("optima set truncated at cap " + std::to_string(cfg.optima_cap) + " (" +
                  At(k, beta) + ")");
  }
  return opt;
}

template <typename F>
void ForEachBelow(const std::vector<Value>& top, F&& visit) {
  std::vector<Value> x(top.size(), 0);
  while (true) {
    visit(std::as_const(x));
    std::size_t j = 0;
    for (; j < x.size(); ++j) {
      if (x[j] < top[j]) {
        ++x[j];
        break;
      }
      x[j] = 0;
    }
    if (j == x.size()) return;
  }
}

inline void Claim(bool ok, std::string_view claim, const std::string& witness) {
  if (!ok) throw ClaimViolation(std::string(claim), witness);
}

// --- value functions ------------------------------------------------------

inline void CheckSingleVariableRecursion(const Analysis& a, const Config&, Tally& tally) {
  const LatticeBox& box = a.stack.box();
  for (std::size_t k = 1; k <= a.instance.n(); ++k) {
    auto cur = a.stack.table(k);
    auto prev = a.stack.table(k - 1);
    const Point& col = a.instance.columns[k - 1];
    const Value c = a.instance.c[k - 1];
    box.ForEach([&](std::size_t idx, const Point& beta) {
      Value best = prev[idx];
      Point rest = beta;
      for (Value l = 1;; ++l) {
        rest = Offset(rest, col, -1);
        if (!Dominated(Point(rest.size(), 0), rest)) break;
        best = std::max(best, prev[box.Index(rest)] + l * c);
      }
      Claim(best == cur[idx], "z_k(beta) = max_l z_{k-1}(beta - l a_k) + l c_k",
            At(k, beta) + ", table=" + std::to_string(cur[idx]) + ", max=" + std::to_string(best));
      tally.ExamineLevel(k);
    });
  }
}

inline void CheckClassicRecursion(const Analysis& a, const Config&, Tally& tally) {
  const std::vector<Value> classic = ClassicGilmoreGomory(a.instance);
  auto final_table = a.stack.table(a.instance.n());
  for (std::size_t idx = 0; idx < classic.size(); ++idx) {
    Claim(classic[idx] == final_table[idx], "classic recursion equals z_n",
          At(a.instance.n(), a.stack.box().PointAt(idx)) + ", classic=" +
              std::to_string(classic[idx]) + ", table=" + std::to_string(final_table[idx]));
    tally.Examine();
  }
}

inline void CheckEnumerationOracle(const Analysis& a, const Config& cfg, Tally& tally) {
  for (std::size_t k = 0; k <= a.instance.n(); ++k) {
    std::vector<Value> brute;
    try {
      brute = BruteForceTable(a.instance, k, cfg.enumeration_cap);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kCapExceeded) throw;
      tally.Decline(std::string("enumeration cap: ") + e.what());
      continue;
    }
    auto t = a.stack.table(k);
    for (std::size_t idx = 0; idx < brute.size(); ++idx) {
      Claim(brute[idx] == t[idx], "z_k equals exhaustive enumeration",
            At(k, a.stack.box().PointAt(idx)) + ", table=" + std::to_string(t[idx]) +
                ", enumeration=" + std::to_string(brute[idx]));
      tally.ExamineLevel(k);
    }
  }
}

inline void CheckBaseLevel(const Analysis& a, const Config&, Tally& tally) {
  for (Value v : a.stack.table(0)) {
    Claim(v == 0, "z_0 is identically zero", "k=0");
    tally.Examine();
  }
  for (std::size_t k = 0; k <= a.instance.n(); ++k) {
    Claim(a.stack.table(k)[0] == 0, "z_k(0) = 0", "k=" + std::to_string(k));
    tally.Examine();
  }
}

inline void CheckColumnLowerBound(const Analysis& a, const Config&, Tally& tally) {
  for (std::size_t k = 1; k <= a.instance.n(); ++k) {
    for (std::size_t j = 0; j < k; ++j) {
      Claim(a.stack.At(k, a.instance.columns[j]) >= a.instance.c[j], "z_k(a_j) >= c_j for j <= k",
            "k=" + std::to_string(k) + ", j=" + std::to_string(j + 1));
      tally.ExamineLevel(k);
    }
  }
}

inline void CheckMonotonicity(const Analysis& a, const Config&, Tally& tally) {
  const LatticeBox& box = a.stack.box();
  for (std::size_t k = 0; k <= a.instance.n(); ++k) {
    auto t = a.stack.table(k);
    box.ForEach([&](std::size_t idx, const Point& beta) {
      for (std::size_t i = 0; i < box.dim(); ++i) {
        if (beta[i] == box.upper()[i]) continue;
        Claim(t[idx + box.strides()[i]] >= t[idx], "z_k(beta + e_i) >= z_k(beta)",
              At(k, beta) + ", i=" + std::to_string(i + 1));
        tally.ExamineLevel(k);
      }
    });
  }
}

inline void CheckSuperadditivity(const Analysis& a, const Config& cfg, Tally& tally) {
  const LatticeBox& box = a.stack.box();
  // Pairs (u, v) with u + v <= b factor per axis into (b_i+1)(b_i+2)/2
  // choices.
  std::vector<std::uint64_t> per_axis;
  std::uint64_t total = 1;
  bool overflow = false;
  for (Coord bi : box.upper()) {
    const auto e = static_cast<std::uint64_t>(bi) + 1;
    per_axis.push_back(e * (e + 1) / 2);
    if (__builtin_mul_overflow(total, per_axis.back(), &total)) overflow = true;
  }
  const std::size_t n = a.instance.n();
  auto check_pair = [&](const Point& u, const Point& v) {
    const Point w = Offset(u, v);
    for (std::size_t k = 0; k <= n; ++k) {
      auto t = a.stack.table(k);
      Claim(t[box.Index(u)] + t[box.Index(v)] <= t[box.Index(w)],
            "z_k(b1) + z_k(b2) <= z_k(b1 + b2)",
            "k=" + std::to_string(k) + ", b1=" + FormatPoint(u) + ", b2=" + FormatPoint(v));
    }
    tally.Examine();
  };
  if (!overflow && total <= cfg.pair_budget) {
    box.ForEach([&](std::size_t, const Point& u) {
      const Point room = Offset(box.upper(), u, -1);
      box.ForEachInRange(Point(u.size(), 0), room, [&](std::size_t, const Point& v) {
        check_pair(u, v);
      });
    });
    return;
  }
  tally.Sampled();
  std::mt19937_64 rng(cfg.seed);
  for (std::uint64_t s = 0; s < cfg.pair_budget; ++s) {
    Point u(box.dim()), v(box.dim());
    for (std::size_t i = 0; i < box.dim(); ++i) {
      // Uniform over {(p, q) : p + q <= b_i}: rank r counts pairs by p.
      std::uniform_int_distribution<std::uint64_t> pick(0, per_axis[i] - 1);
      std::uint64_t r = pick(rng);
      Coord p = 0;
      auto width = static_cast<std::uint64_t>(box.upper()[i]) + 1;
      while (r >= width) {
        r -= width;
        --width;
        ++p;
      }
      u[i] = p;
      v[i] = static_cast<Coord>(r);
    }
    check_pair(u, v);
  }
}

inline void CheckComplementarySlackness(const Analysis& a, const Config& cfg, Tally& tally) {
  for (std::size_t k = 1; k <= a.instance.n(); ++k) {
    a.stack.box().ForEach([&](std::size_t, const Point& beta) {
      const OptimaSet opt = OptimaFor(a, cfg, tally, k, beta);
      for (const Solution& star : opt.solutions) {
        ForEachBelow(star.x, [&](const std::vector<Value>& x) {
          Decompose(a.instance, a.stack, k, beta, star.x, x);
          tally.ExamineLevel(k);
        });
      }
    });
  }
}

inline void CheckLevelMonotonicity(const Analysis& a, const Config&, Tally& tally) {
  for (std::size_t k = 1; k <= a.instance.n(); ++k) {
    auto cur = a.stack.table(k);
    auto prev = a.stack.table(k - 1);
    for (std::size_t idx = 0; idx < cur.size(); ++idx) {
      Claim(cur[idx] >= prev[idx], "z_k >= z_{k-1} pointwise",
            At(k, a.stack.box().PointAt(idx)));
      tally.ExamineLevel(k);
    }
  }
}

inline void CheckUnattainableValue(const Analysis& a, const Config& cfg, Tally& tally) {
  const LatticeBox& box = a.stack.box();
  for (std::size_t k = 1; k <= a.instance.n(); ++k) {
    const std::vector<Value> values = LevelValueSet(a.stack, k);
    auto t = a.stack.table(k);
    try {
      EnumerateFeasible(a.instance, k, a.instance.b, cfg.enumeration_cap,
                        [&](const std::vector<Value>& x, const Point& usage, Value v) {
                          if (std::binary_search(values.begin(), values.end(), v)) return;
                          Claim(t[box.Index(usage)] != v,
                                "a value outside the level value set is never optimal",
                                "k=" + std::to_string(k) + ", x=" + FormatSolution(x));
                          tally.ExamineLevel(k);
                        });
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kCapExceeded) throw;
      tally.Decline(std::string("enumeration cap: ") + e.what());
    }
  }
}

inline void CheckStepDown(const Analysis& a, const Config& cfg, Tally& tally) {
  for (std::size_t k = 1; k <= a.instance.n(); ++k) {
    a.stack.box().ForEach([&](std::size_t, const Point& beta) {
      for (const Solution& star : OptimaFor(a, cfg, tally, k, beta).solutions) {
        for (Value t = 0; t <= star.x[k - 1]; ++t) {
          StepDown(a.instance, a.stack, k, beta, star.x, t);
          tally.ExamineLevel(k);
        }
      }
    });
  }
}

inline void CheckNewValueNeedsColumn(const Analysis& a, const Config& cfg, Tally& tally) {
  for (std::size_t k = 1; k <= a.instance.n(); ++k) {
    const std::vector<Value> earlier = LevelValueSet(a.stack, k - 1);
    auto t = a.stack.table(k);
    a.stack.box().ForEach([&](std::size_t idx, const Point& beta) {
      if (std::binary_search(earlier.begin(), earlier.end(), t[idx])) return;
      for (const Solution& s : OptimaFor(a, cfg, tally, k, beta).solutions) {
        Claim(s.x[k - 1] > 0, "S_{k-1}(alpha) empty => every optimum has x_k > 0",
              At(k, beta) + ", x=" + FormatSolution(s.x));
        tally.ExamineLevel(k);
      }
    });
  }
}

// --- level-set-minimal vectors -------------------------------------------

inline void CheckTightness(const Analysis& a, const Config& cfg, Tally& tally) {
  for (std::size_t k = 0; k <= a.instance.n(); ++k) {
    const LsmSet lsm = ComputeLsmSet(a.stack, k);
    a.stack.box().ForEach([&](std::size_t idx, const Point& beta) {
      if (!lsm.ContainsIndex(idx)) return;
      for (const Solution& s : OptimaFor(a, cfg, tally, k, beta).solutions) {
        Claim(s.usage == beta, "optima at LSM points are tight",
              At(k, beta) + ", x=" + FormatSolution(s.x));
        tally.ExamineLevel(k);
      }
    });
  }
}

inline void CheckOptimaEnumeration(const Analysis& a, const Config& cfg, Tally& tally) {
  const LatticeBox& box = a.stack.box();
  for (std::size_t k = 0; k <= a.instance.n(); ++k) {
    auto t = a.stack.table(k);
    // weight[u] = #{x : Ax = u, cx = z_k(u)}. x is optimal at beta iff
    // Ax <= beta and z_k(Ax) = cx = z_k(beta).
    std::vector<std::uint64_t> weight(box.cell_count(), 0);
    try {
      EnumerateFeasible(a.instance, k, a.instance.b, cfg.enumeration_cap,
                        [&](const std::vector<Value>&, const Point& u, Value v) {
                          const std::size_t idx = box.Index(u);
                          if (t[idx] == v) ++weight[idx];
                        });
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kCapExceeded) throw;
      tally.Decline(std::string("enumeration cap: ") + e.what());
      continue;
    }
    box.ForEach([&](std::size_t idx, const Point& beta) {
      std::uint64_t expected = 0;
      box.ForEachInRange(Point(beta.size(), 0), beta, [&](std::size_t u, const Point&) {
        if (t[u] == t[idx]) expected += weight[u];
      });
      OptimaSet opt = OptimaFor(a, cfg, tally, k, beta);
      std::vector<std::vector<Value>> xs;
      for (const Solution& s : opt.solutions) {
        Claim(Dominated(s.usage, beta) && s.value == t[idx], "enumerated optima are optimal",
              At(k, beta) + ", x=" + FormatSolution(s.x));
        xs.push_back(s.x);
      }
      std::sort(xs.begin(), xs.end());
      Claim(std::adjacent_find(xs.begin(), xs.end()) == xs.end(), "enumerated optima are distinct",
            At(k, beta));
      if (opt.truncated) {
        Claim(expected > xs.size(), "truncation only when more optima exist", At(k, beta));
      } else {
        Claim(expected == xs.size(), "enumeration finds every optimum",
              At(k, beta) + ", found=" + std::to_string(xs.size()) +
                  ", exist=" + std::to_string(expected));
      }
      tally.ExamineLevel(k);
    });
  }
}

inline void CheckLsmDefinition(const Analysis& a, const Config&, Tally& tally) {
  const LatticeBox& box = a.stack.box();
  for (std::size_t k = 0; k <= a.instance.n(); ++k) {
    auto t = a.stack.table(k);
    const LsmSet lsm = ComputeLsmSet(a.stack, k);
    box.ForEach([&](std::size_t idx, const Point& beta) {
      // Unsimplified form on the lattice: every point strictly below has
      // strictly smaller value.
      bool direct = true;
      box.ForEachInRange(Point(beta.size(), 0), beta, [&](std::size_t u, const Point&) {
        if (u != idx && t[u] >= t[idx]) direct = false;
      });
      Claim(direct == lsm.ContainsIndex(idx), "axis test agrees with the full LSM definition",
            At(k, beta));
      tally.ExamineLevel(k);
    });
  }
}

inline void CheckLevelSetPartition(const Analysis& a, const Config&, Tally& tally) {
  for (std::size_t k = 0; k <= a.instance.n(); ++k) {
    const std::vector<Value> values = LevelValueSet(a.stack, k);
    std::size_t covered = 0;
    for (Value alpha = -1; alpha <= values.back() + 1; ++alpha) {
      const LevelSet s = ComputeLevelSet(a.stack, k, alpha);
      const bool attained = std::binary_search(values.begin(), values.end(), alpha);
      Claim(s.members.empty() != attained, "S_k(alpha) empty iff alpha unattained",
            "k=" + std::to_string(k) + ", alpha=" + std::to_string(alpha));
      for (const Point& p : s.members) {
        Claim(a.stack.At(k, p) == alpha, "level set members carry its value", At(k, p));
      }
      covered += s.members.size();
    }
    Claim(covered == a.stack.box().cell_count(), "level sets partition the lattice",
          "k=" + std::to_string(k));
    tally.ExamineLevel(k, covered);
  }
}

inline void CheckPersistence(const Analysis& a, const Config&, Tally& tally) {
  std::uint64_t premise = 0;
  for (std::size_t k = 1; k <= a.instance.n(); ++k) {
    const LsmSet prev = ComputeLsmSet(a.stack, k - 1);
    a.stack.box().ForEach([&](std::size_t idx, const Point& beta) {
      if (!prev.ContainsIndex(idx)) return;
      if (vflat::CheckLsmPersistence(a.stack, a.dag, k, beta).premise_holds) ++premise;
      tally.ExamineLevel(k);
    });
  }
  tally.Note("premise held at " + std::to_string(premise) + " points");
}

inline void RayExclusionOver(const Analysis& a, Tally& tally, RayHypothesis hypothesis) {
  std::uint64_t skipped = 0;
  for (std::size_t k = 1; k <= a.instance.n(); ++k) {
    const LsmSet prev = ComputeLsmSet(a.stack, k - 1);
    a.stack.box().ForEach([&](std::size_t idx, const Point& beta) {
      if (prev.ContainsIndex(idx)) return;
      const RayExclusion r = LsmRayExclusion(a.instance, a.stack, k, beta, hypothesis);
      if (r.declined) {
        ++skipped;
        return;
      }
      tally.ExamineLevel(k, r.excluded.size());
    });
  }
  tally.Note(std::to_string(skipped) + " start points outside the hypotheses");
}

inline void CheckRayExclusion(const Analysis& a, const Config&, Tally& tally) {
  RayExclusionOver(a, tally, RayHypothesis::kStated);
}

inline void CheckRayExclusionInSpan(const Analysis& a, const Config&, Tally& tally) {
  RayExclusionOver(a, tally, RayHypothesis::kSpanRestricted);
}

inline void CheckLsmStepDown(const Analysis& a, const Config& cfg, Tally& tally) {
  for (std::size_t k = 1; k <= a.instance.n(); ++k) {
    const LsmSet cur = ComputeLsmSet(a.stack, k);
    const LsmSet prev = ComputeLsmSet(a.stack, k - 1);
    const Point& col = a.instance.columns[k - 1];
    a.stack.box().ForEach([&](std::size_t idx, const Point& beta) {
      if (!cur.ContainsIndex(idx)) return;
      for (const Solution& s : OptimaFor(a, cfg, tally, k, beta).solutions) {
        Claim(prev.Contains(Offset(beta, col, -s.x[k - 1])), "beta - x*_k a_k in B_{k-1}",
              At(k, beta) + ", x*=" + FormatSolution(s.x));
        tally.ExamineLevel(k);
      }
    });
  }
}

inline void CheckDownwardClosure(const Analysis& a, const Config& cfg, Tally& tally) {
  for (std::size_t k = 1; k <= a.instance.n(); ++k) {
    const LsmSet cur = ComputeLsmSet(a.stack, k);
    a.stack.box().ForEach([&](std::size_t idx, const Point& beta) {
      if (!cur.ContainsIndex(idx)) return;
      for (const Solution& s : OptimaFor(a, cfg, tally, k, beta).solutions) {
        tally.ExamineLevel(k, LsmDownwardClosure(a.stack, a.dag, k, s.x, cfg.enumeration_cap).size());
      }
    });
  }
}

inline void CheckUnusedColumns(const Analysis& a, const Config&, Tally& tally) {
  for (std::size_t k = 1; k <= a.instance.n(); ++k) {
    const UnusedColumnReport r = UnusedColumnFilter(a.stack, a.dag, k);
    Claim(r.holds, "columns outside B_k are unused at LSM points",
          r.holds ? "" : At(k, *r.witness_beta) + ", j=" + std::to_string(*r.witness_column + 1));
    tally.ExamineLevel(k, r.points_examined);
  }
}

inline void CheckRecursiveCover(const Analysis& a, const Config&, Tally& tally) {
  for (std::size_t k = 1; k <= a.instance.n(); ++k) {
    const RecursiveCover r = RelationshipCover(a.stack, a.dag, k);
    Claim(r.holds, "B_k lies in B_{k-1} + Z_+ a_k", r.holds ? "" : At(k, *r.counterexample));
    tally.ExamineLevel(k, r.witnesses.size());
  }
}

inline void CheckRayPrefix(const Analysis& a, const Config&, Tally& tally) {
  const LatticeBox& box = a.stack.box();
  for (std::size_t k = 1; k <= a.instance.n(); ++k) {
    const Point& col = a.instance.columns[k - 1];
    box.ForEach([&](std::size_t, const Point& beta) {
      Point end = beta;
      for (Value t = 0; box.Contains(end); ++t, end = Offset(end, col)) {
        const RayPrefix r = LsmRayPrefix(a.instance, a.stack, k, beta, t);
        if (!r.declined) tally.ExamineLevel(k);
      }
    });
  }
}

inline void CheckSaturation(const Analysis& a, const Config&, Tally& tally) {
  const SaturationResult r = LsmSaturation(a.stack);
  Claim(r.persists, "once B_k is the whole lattice it stays so",
        r.persists ? "" : "saturated at k=" + std::to_string(*r.first) + ", lost at k=" +
                              std::to_string(*r.broken_at));
  tally.Examine(a.instance.n() + 1);
  tally.Note(r.first ? "first saturating level k=" + std::to_string(*r.first)
                     : "no level saturates");
}

// --- columns --------------------------------------------------------------

inline void CheckDominatedColumnUnused(const Analysis& a, const Config&, Tally& tally) {
  const std::size_t n = a.instance.n();
  for (std::size_t j = 0; j < n; ++j) {
    if (a.stack.At(n, a.instance.columns[j]) <= a.instance.c[j]) continue;
    const std::vector<bool> used = ColumnUsage(a.dag, n, j);
    auto it = std::find(used.begin(), used.end(), true);
    Claim(it == used.end(), "z_n(a_j) > c_j => x_j = 0 in every optimum",
          it == used.end() ? ""
                           : "j=" + std::to_string(j + 1) + ", beta=" +
                                 FormatPoint(a.stack.box().PointAt(
                                     static_cast<std::size_t>(it - used.begin()))));
    tally.Examine(used.size());
  }
}

inline void CheckColumnPersistence(const Analysis& a, const Config&, Tally& tally) {
  const OrderedInstance ordered = OrderColumns(a.instance);
  const Instance& inst = ordered.instance;
  const ValueStack stack = BuildStack(inst);
  const std::size_t n = inst.n();
  for (std::size_t k = 1; k <= n; ++k) {
    const Point& col = inst.columns[k - 1];
    if (!IsLsm(stack, k, col) || stack.At(k, col) != inst.c[k - 1]) continue;
    bool later_below = false;
    for (std::size_t l = k; l < n; ++l) later_below |= Dominated(inst.columns[l], col);
    if (later_below) continue;
    Claim(stack.At(n, col) == inst.c[k - 1] && IsLsm(stack, n, col),
          "a_k in B_k with z_k(a_k) = c_k and no later column below it stays so at level n",
          "ordered k=" + std::to_string(k));
    tally.Examine();
  }
}

inline void CheckColumnTrichotomy(const Analysis& a, const Config&, Tally& tally) {
  const OrderedInstance ordered = OrderColumns(a.instance);
  Claim(OrderingViolations(ordered.instance).empty(),
        "ordering leaves no earlier column dominating a later one", "");
  const ValueStack stack = BuildStack(ordered.instance);
  const ColumnClassification cls = ClassifyColumns(ordered.instance, stack, ordered.permutation);
  for (std::size_t k = 1; k <= ordered.instance.n(); ++k) {
    const ColumnInfo& info = cls.columns[k - 1];
    const Point& col = ordered.instance.columns[k - 1];
    const Value c = ordered.instance.c[k - 1];
    const std::string where = "ordered k=" + std::to_string(k);
    Claim(stack.At(k, col) == std::max(info.previous_value, c),
          "z_k(a_k) = max{z_{k-1}(a_k), c_k}", where);
    if (info.tag == ColumnCase::kBelow) {
      Claim(info.lsm, "z_{k-1}(a_k) < c_k => a_k in B_k", where);
    } else {
      Claim(info.lsm == IsLsm(stack, k - 1, col),
            "z_{k-1}(a_k) >= c_k => (a_k in B_k iff a_k in B_{k-1})", where);
    }
    Claim(!info.necessary || info.tag != ColumnCase::kAbove, "a necessary column is never ABOVE",
          where);
    tally.Examine();
  }
}

inline void CheckColumnNecessity(const Analysis& a, const Config&, Tally& tally) {
  const OrderedInstance ordered = OrderColumns(a.instance);
  const ValueStack stack = BuildStack(ordered.instance);
  const ColumnClassification cls = ClassifyColumns(ordered.instance, stack, ordered.permutation);
  std::vector<std::size_t> keep;
  for (std::size_t k = 0; k < cls.columns.size(); ++k) {
    if (cls.columns[k].necessary) keep.push_back(k);
  }
  const Instance pruned = SelectColumns(ordered.instance, keep);
  auto full = stack.table(ordered.instance.n());
  std::vector<Value> reduced(full.size(), 0);
  if (!keep.empty()) {
    const ValueStack rebuilt = BuildStack(pruned, Retention::kFinalOnly);
    auto t = rebuilt.table(pruned.n());
    reduced.assign(t.begin(), t.end());
  }
  for (std::size_t idx = 0; idx < full.size(); ++idx) {
    Claim(full[idx] == reduced[idx], "dropping unnecessary columns keeps z_n",
          "beta=" + FormatPoint(stack.box().PointAt(idx)));
    tally.Examine();
  }
  tally.Note(std::to_string(keep.size()) + " of " + std::to_string(cls.columns.size()) +
             " columns necessary");
}

// --- MC-level sets --------------------------------------------------------

inline void CheckComponentLabels(const Analysis& a, const Config&, Tally& tally) {
  const ComponentMap& map = a.components;
  const LatticeBox& box = map.box();
  const auto values = map.values();
  // Independent union-find over the equal-value adjacency.
  std::vector<std::size_t> parent(box.cell_count());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t idx = 0; idx < box.cell_count(); ++idx) {
    for (std::size_t i = 0; i < box.dim(); ++i) {
      if (box.CoordAt(idx, i) == box.upper()[i]) continue;
      const std::size_t nb = idx + box.strides()[i];
      if (values[nb] == values[idx]) parent[find(nb)] = find(idx);
    }
  }
  std::vector<std::size_t> rep_of_label(map.components().size(), ComponentMap::kUnlabeled);
  std::vector<std::size_t> label_of_rep(box.cell_count(), ComponentMap::kUnlabeled);
  for (std::size_t idx = 0; idx < box.cell_count(); ++idx) {
    const std::size_t label = map.LabelAt(idx);
    const std::size_t rep = find(idx);
    const std::string where = "beta=" + FormatPoint(box.PointAt(idx));
    Claim(label < rep_of_label.size(), "every cell is labelled", where);
    if (rep_of_label[label] == ComponentMap::kUnlabeled) rep_of_label[label] = rep;
    if (label_of_rep[rep] == ComponentMap::kUnlabeled) label_of_rep[rep] = label;
    Claim(rep_of_label[label] == rep && label_of_rep[rep] == label,
          "labels match the equal-value adjacency closure", where);
    Claim(map.component(label).value == values[idx], "component value matches z", where);
    tally.Examine();
  }
}

inline void CheckAdjacentPaths(const Analysis& a, const Config&, Tally& tally) {
  const ComponentMap& map = a.components;
  for (const Component& comp : map.components()) {
    for (const Point& target : comp.members) {
      const std::vector<Point> path = AdjacentPath(map, comp.members.front(), target);
      const std::string where = "from " + FormatPoint(comp.members.front()) + " to " + FormatPoint(target);
      Claim(path.front() == comp.members.front() && path.back() == target, "path joins its endpoints", where);
      for (std::size_t i = 0; i < path.size(); ++i) {
        Claim(map.Label(path[i]) == comp.id, "path stays in the component", where);
        if (i > 0) Claim(HypercubesAdjacent(path[i - 1], path[i]), "path steps are adjacent", where);
      }
      tally.Examine();
    }
  }
  if (map.components().size() > 1) {
    const Point& p = map.component(0).members.front();
    const Point& q = map.component(1).members.front();
    bool refused = false;
    try {
      AdjacentPath(map, p, q);
    } catch (const Error& e) {
      refused = e.kind() == ErrorKind::kPrecondition;
    }
    Claim(refused, "no path between different components", FormatPoint(p) + ", " + FormatPoint(q));
  }
}

inline void CheckPathSimplicity(const Analysis& a, const Config&, Tally& tally) {
  const ComponentMap& map = a.components;
  for (const Component& comp : map.components()) {
    for (const Point& target : comp.members) {
      std::vector<Point> path = AdjacentPath(map, comp.members.back(), target);
      std::sort(path.begin(), path.end());
      Claim(std::adjacent_find(path.begin(), path.end()) == path.end(),
            "a path visits each lattice point at most once",
            "from " + FormatPoint(comp.members.back()) + " to " + FormatPoint(target));
      tally.Examine();
    }
  }
}

inline void CheckIsovaluePaths(const Analysis& a, const Config&, Tally& tally) {
  const ComponentMap& map = a.components;
  const LatticeBox& box = map.box();
  // Fractional endpoints: shift each coordinate by 1/2 inside the cell.
  auto lift = [&](const Point& p) {
    DecimalPoint d = ToDecimalPoint(p);
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] < box.upper()[i]) d[i] = Decimal::Parse(std::to_string(p[i]) + ".5");
    }
    return d;
  };
  for (const Component& comp : map.components()) {
    const DecimalPoint from = lift(comp.members.front());
    const DecimalPoint to = lift(comp.members.back());
    const LatticePath path = IsovaluePath(map, from, to);
    const std::vector<DecimalPoint> pts = path.Points();
    const std::string where = FormatDecimalPoint(from) + " -> " + FormatDecimalPoint(to);
    Claim(pts.front() == from && pts.back() == to, "isovalue path joins its endpoints", where);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      Claim(ComponentOf(map, pts[i]) == comp.id, "isovalue path stays in T(beta)", where);
      if (i == 0) continue;
      std::size_t moved = 0;
      for (std::size_t ax = 0; ax < pts[i].size(); ++ax) {
        if (pts[i][ax] == pts[i - 1][ax]) continue;
        ++moved;
        // Either a move inside one unit cell or a unit lattice step.
        const Decimal lo = std::min(pts[i][ax], pts[i - 1][ax]);
        const Decimal hi = std::max(pts[i][ax], pts[i - 1][ax]);
        Claim(lo.Floor() == hi.Floor() ||
                  (lo.IsInteger() && hi.IsInteger() && hi.Floor() == lo.Floor() + 1),
              "isovalue steps have length at most one", where);
      }
      Claim(moved == 1, "isovalue steps move along a single axis", where);
    }
    tally.Examine(pts.size());
  }
}

inline void CheckSegmentMembership(const Analysis& a, const Config&, Tally& tally) {
  const ComponentMap& map = a.components;
  const LatticeBox& box = map.box();
  box.ForEach([&](std::size_t lo, const Point& low) {
    box.ForEachInRange(low, box.upper(), [&](std::size_t hi, const Point& high) {
      if (map.values()[hi] != map.values()[lo]) return;
      Claim(map.LabelAt(hi) == map.LabelAt(lo), "equal value and domination give one MC-level set",
            FormatPoint(low) + " <= " + FormatPoint(high));
      tally.Examine();
    });
  });
}

inline void CheckFrontier(const Analysis& a, const Config&, Tally& tally) {
  for (const Component& comp : a.components.components()) {
    const Frontier f = LsmFrontier(a.components, a.stack, comp.id);
    std::vector<Point> minimal = comp.minimal;
    Claim(f.points == minimal, "minimal members are the LSM members", "component " + std::to_string(comp.id));
    tally.Examine(f.members_checked + f.outsiders_checked);
  }
}

inline void CheckLsmChains(const Analysis& a, const Config& cfg, Tally& tally) {
  std::uint64_t budget = cfg.pair_budget;
  for (const Component& comp : a.components.components()) {
    for (std::size_t i = 0; i < comp.minimal.size(); ++i) {
      for (std::size_t j = 0; j < comp.minimal.size(); ++j) {
        if (budget == 0) {
          tally.Sampled();
          return;
        }
        --budget;
        const LsmChainResult chain = LsmChain(a.components, a.stack, comp.minimal[i], comp.minimal[j]);
        std::vector<Point> sorted = chain.points;
        std::sort(sorted.begin(), sorted.end());
        Claim(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end() &&
                  chain.points.front() == comp.minimal[i] && chain.points.back() == comp.minimal[j],
              "LSM chain has distinct points and the right endpoints",
              FormatPoint(comp.minimal[i]) + " -> " + FormatPoint(comp.minimal[j]));
        for (const Point& p : chain.points) {
          Claim(std::find(comp.minimal.begin(), comp.minimal.end(), p) != comp.minimal.end(),
                "LSM chain stays on the frontier", FormatPoint(p));
        }
        tally.Examine();
      }
    }
  }
}

inline void CheckOptimumStability(const Analysis& a, const Config& cfg, Tally& tally) {
  for (const Component& comp : a.components.components()) {
    for (const CommonOptimum& c : CommonOptima(a.components, a.stack, a.dag, comp.id, cfg.optima_cap)) {
      if (c.truncated) {
        tally.Decline("optima set truncated at cap " + std::to_string(cfg.optima_cap) +
                      " (beta=" + FormatPoint(c.anchor) + ")");
      }
      tally.Examine(c.optima.size() * c.region.size());
    }
  }
}

inline void CheckComponentStepDown(const Analysis& a, const Config& cfg, Tally& tally) {
  const std::size_t n = a.instance.n();
  for (const Component& comp : a.components.components()) {
    if (comp.value <= 0) continue;
    for (const Point& bar : comp.minimal) {
      for (const Solution& s : OptimaFor(a, cfg, tally, n, bar).solutions) {
        for (std::size_t j = 0; j < n; ++j) {
          for (Value t = 1; t <= s.x[j]; ++t) {
            for (const Point& beta : comp.members) {
              if (!Dominated(bar, beta)) continue;
              StepDownComponent(a.components, a.stack, a.dag, bar, beta, s.x, j, t);
              tally.Examine();
            }
          }
        }
      }
    }
  }
}

inline void CheckHypercubeCover(const Analysis& a, const Config&, Tally& tally) {
  const ComponentMap& map = a.components;
  std::size_t interior = 0;
  for (const Component& comp : map.components()) {
    if (comp.TouchesBoundary()) continue;
    ++interior;
    const HypercubeCover cover = ComputeHypercubeCover(map, comp.id);
    const std::string where = "component " + std::to_string(comp.id);
    // The cells G(gamma) whose floor carries the label are exactly the
    // anchors, each used once.
    std::vector<Point> anchors = cover.anchors;
    std::sort(anchors.begin(), anchors.end());
    Claim(std::adjacent_find(anchors.begin(), anchors.end()) == anchors.end(),
          "cover anchors are distinct", where);
    std::size_t labelled = 0;
    for (std::size_t idx = 0; idx < map.box().cell_count(); ++idx) {
      if (map.LabelAt(idx) == comp.id) ++labelled;
    }
    Claim(labelled == anchors.size(), "cover anchors are exactly the labelled cells", where);
    for (const Point& p : anchors) Claim(map.Label(p) == comp.id, "anchors carry the label", where);
    for (std::size_t i = 1; i < cover.certificate.size(); ++i) {
      Claim(HypercubesAdjacent(cover.certificate[i - 1], cover.certificate[i]),
            "consecutive cover hypercubes share a facet", where);
    }
    tally.Examine(anchors.size());
  }
  if (interior == 0) {
    tally.Decline("every component meets an upper face of the box");
  } else {
    tally.Note(std::to_string(map.components().size() - interior) +
               " boundary-touching components not certified");
  }
}

}  // namespace internal

struct CheckDefinition {
  std::string_view id;
  std::string_view statement;
  void (*run)(const Analysis&, const Config&, internal::Tally&);
};

inline const std::vector<CheckDefinition>& CheckCatalog() {
  using namespace internal;  // NOLINT
  static const std::vector<CheckDefinition> catalog = {
      {"single_variable_recursion", "z_k(beta) = max_l {z_{k-1}(beta - l a_k) + l c_k : l a_k <= beta}", CheckSingleVariableRecursion},
      {"classic_recursion", "z(beta) = max_j {z(beta - a_j) + c_j : a_j <= beta} matches z_n", CheckClassicRecursion},
      {"enumeration_oracle", "every z_k equals exhaustive enumeration of IP_k(beta)", CheckEnumerationOracle},
      {"base_level", "z_0 = 0 and z_k(0) = 0", CheckBaseLevel},
      {"column_lower_bound", "z_k(a_j) >= c_j for j <= k", CheckColumnLowerBound},
      {"monotonicity", "z_k is nondecreasing", CheckMonotonicity},
      {"superadditivity", "z_k(b1) + z_k(b2) <= z_k(b1 + b2)", CheckSuperadditivity},
      {"complementary_slackness", "x <= x* optimal: z_k(Ax) = cx and z_k(Ax) + z_k(beta - Ax) = z_k(beta)", CheckComplementarySlackness},
      {"level_monotonicity", "z_k >= z_{k-1} pointwise", CheckLevelMonotonicity},
      {"unattainable_value", "S_k(alpha) empty => no x with cx = alpha is optimal", CheckUnattainableValue},
      {"step_down", "x* - t e_k optimal at beta - t a_k; beta - x*_k a_k in S_{k-1}(alpha - c_k x*_k)", CheckStepDown},
      {"new_value_needs_column", "beta in S_k(alpha), S_{k-1}(alpha) empty => x*_k > 0", CheckNewValueNeedsColumn},
      {"tightness_at_lsm", "beta in B_k => every optimum satisfies Ax* = beta", CheckTightness},
      {"optima_enumeration", "enumerated opt_k(beta) is exactly the optimal set", CheckOptimaEnumeration},
      {"lsm_definition", "axis-neighbour LSM test equals the full definition", CheckLsmDefinition},
      {"level_set_partition", "level sets partition the lattice", CheckLevelSetPartition},
      {"lsm_persistence", "beta in B_{k-1}, no optimum below beta uses x_k => beta in B_k", CheckPersistence},
      {"lsm_ray_exclusion", "beta not in B_{k-1}, a_1..a_k and (beta, a_k) independent => beta + t a_k not in B_k", CheckRayExclusion},
      {"lsm_ray_exclusion_in_span", "as lsm_ray_exclusion, with beta in span(a_1..a_{k-1}) or outside span(a_1..a_k)", CheckRayExclusionInSpan},
      {"lsm_step_down", "beta in B_k, x* optimal => beta - x*_k a_k in B_{k-1}", CheckLsmStepDown},
      {"lsm_downward_closure", "Ax* in B_k => Ax in B_k for x < x*", CheckDownwardClosure},
      {"lsm_unused_columns", "a_j not in B_k => x*_j = 0 at every beta in B_k", CheckUnusedColumns},
      {"lsm_recursive_cover", "B_k is contained in B_{k-1} + Z_+ a_k", CheckRecursiveCover},
      {"lsm_ray_prefix", "beta + t a_k in B_k with value z_k(beta) + t c_k => beta + s a_k in B_k, s <= t", CheckRayPrefix},
      {"lsm_saturation", "B_k equal to the lattice persists for all later k", CheckSaturation},
      {"dominated_column_unused", "z_n(a_j) > c_j => x*_j = 0 in every optimum", CheckDominatedColumnUnused},
      {"lsm_column_persistence", "a_k in B_k, z_k(a_k) = c_k, no later column below a_k => z_n(a_k) = c_k, a_k in B_n", CheckColumnPersistence},
      {"column_trichotomy", "z_k(a_k) = max{z_{k-1}(a_k), c_k} with the BELOW/EQUAL/ABOVE consequences", CheckColumnTrichotomy},
      {"column_necessity", "columns with z_n(a_j) = c_j and a_j in B_n suffice for z_n", CheckColumnNecessity},
      {"component_labels", "labels are the classes of the equal-value adjacency relation", CheckComponentLabels},
      {"adjacent_paths", "members of one MC-level lattice are joined by adjacent in-component paths", CheckAdjacentPaths},
      {"path_simplicity", "lattice paths visit each point at most once", CheckPathSimplicity},
      {"isovalue_paths", "fractional points of one T(beta) are joined by unit axis steps inside it", CheckIsovaluePaths},
      {"segment_membership", "beta_hat >= beta_bar with equal value => beta_hat in T(beta_bar)", CheckSegmentMembership},
      {"frontier_characterization", "beta in T(beta_bar) iff equal value and beta dominates an LSM member", CheckFrontier},
      {"lsm_chains", "LSM members of one T are linked by a chain with dominating in-component witnesses", CheckLsmChains},
      {"optimum_stability", "an optimum at an LSM member is optimal at every member above it", CheckOptimumStability},
      {"component_step_down", "beta - t a_j in T(beta_bar - t a_j) for x*_j > 0, t <= x*_j", CheckComponentStepDown},
      {"hypercube_cover", "closure of T is uniquely covered by adjacent anchored unit hypercubes", CheckHypercubeCover},
  };
  return catalog;
}

inline CheckEntry RunDefinition(const CheckDefinition& def, const Analysis& a, const Config& cfg) {
  CheckEntry entry;
  entry.id = std::string(def.id);
  entry.statement = std::string(def.statement);
  internal::Tally tally(entry);
  try {
    def.run(a, cfg, tally);
    entry.status = entry.reason.empty() ? Status::kPass : Status::kDeclined;
  } catch (const ClaimViolation& v) {
    entry.status = Status::kFail;
    entry.witness = v.what();
  } catch (const std::exception& e) {
    entry.status = Status::kFail;
    entry.witness = std::string("unexpected error: ") + e.what();
  }
  if (entry.status == Status::kFail) entry.reason.clear();
  return entry;
}

inline Report NewReport(const Analysis& a, const Config& cfg) {
  Report r;
  r.instance_name = a.instance.name;
  r.b = a.instance.b;
  r.m = a.instance.m();
  r.n = a.instance.n();
  r.config = cfg;
  return r;
}

inline Report RunSuite(const Analysis& a, const Config& cfg = {}) {
  a.stack.RequireAllLevels();
  Report r = NewReport(a, cfg);
  for (const auto& def : CheckCatalog()) r.entries.push_back(RunDefinition(def, a, cfg));
  return r;
}

inline CheckEntry RunCheck(std::string_view id, const Analysis& a, const Config& cfg = {}) {
  a.stack.RequireAllLevels();
  for (const auto& def : CheckCatalog()) {
    if (def.id == id) return RunDefinition(def, a, cfg);
  }
  throw Error(ErrorKind::kUnknownCheck, "unknown check id '" + std::string(id) + "'");
}

inline std::string Report::ToText() const {
  std::string out = "verification report\n";
  out += "instance: " + (instance_name.empty() ? std::string("(unnamed)") : instance_name) +
         "  m=" + std::to_string(m) + " n=" + std::to_string(n) + " b=" + FormatPoint(b) + "\n";
  out += "config: optima_cap=" + std::to_string(config.optima_cap) +
         " enumeration_cap=" + std::to_string(config.enumeration_cap) +
         " pair_budget=" + std::to_string(config.pair_budget) +
         " seed=" + std::to_string(config.seed) + "\n\n";
  out += "checks:\n";
  for (const auto& e : entries) out += "  " + e.id + ": " + e.statement + "\n";
  out += "\nresults:\n";
  for (const auto& e : entries) {
    std::string status(StatusName(e.status));
    if (e.status == Status::kPass && e.sampled) status = "sampled PASS";
    out += "  [" + status + "] " + e.id + "  examined=" + std::to_string(e.examined);
    if (!e.per_level.empty()) {
      out += " per_k=[";
      for (std::size_t k = 0; k < e.per_level.size(); ++k) {
        if (k > 0) out += ",";
        out += std::to_string(e.per_level[k]);
      }
      out += "]";
    }
    out += "\n";
    if (!e.witness.empty()) out += "      witness: " + e.witness + "\n";
    if (!e.reason.empty()) out += "      reason: " + e.reason + "\n";
    if (!e.note.empty()) out += "      note: " + e.note + "\n";
  }
  out += "\nsummary: " + std::to_string(Count(Status::kPass)) + " passed, " +
         std::to_string(Count(Status::kFail)) + " failed, " +
         std::to_string(Count(Status::kDeclined)) + " declined\n";
  return out;
}

inline nlohmann::ordered_json Report::ToJson() const {
  nlohmann::ordered_json doc;
  doc["instance"] = instance_name;
  doc["m"] = m;
  doc["n"] = n;
  doc["b"] = b;
  doc["config"] = {{"optima_cap", config.optima_cap},
                   {"enumeration_cap", config.enumeration_cap},
                   {"pair_budget", config.pair_budget},
                   {"seed", config.seed}};
  nlohmann::ordered_json checks = nlohmann::ordered_json::object();
  for (const auto& e : entries) checks[e.id] = e.statement;
  doc["checks"] = std::move(checks);
  nlohmann::ordered_json results = nlohmann::ordered_json::array();
  for (const auto& e : entries) {
    nlohmann::ordered_json r;
    r["id"] = e.id;
    r["status"] = std::string(StatusName(e.status));
    r["sampled"] = e.sampled;
    r["examined"] = e.examined;
    if (!e.per_level.empty()) r["per_k"] = e.per_level;
    if (!e.witness.empty()) r["witness"] = e.witness;
    if (!e.reason.empty()) r["reason"] = e.reason;
    if (!e.note.empty()) r["note"] = e.note;
    results.push_back(std::move(r));
  }
  doc["results"] = std::move(results);
  doc["summary"] = {{"pass", Count(Status::kPass)},
                    {"fail", Count(Status::kFail)},
                    {"declined", Count(Status::kDeclined)}};
  return doc;
}

}  // namespace vflat

#endif  // VFLAT_VERIFY_HPP_
