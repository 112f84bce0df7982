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

#include <gtest/gtest.h>

#include <random>
#include <set>
#include <vector>

#include "oracle.hpp"
#include "vflat/solutions.hpp"
#include "vflat/value_table.hpp"

namespace vflat {
namespace {

std::set<std::vector<Value>> AsSet(const OptimaSet& opt) {
  std::set<std::vector<Value>> out;
  for (const auto& s : opt.solutions) out.insert(s.x);
  return out;
}

class ExipSolutions : public ::testing::Test {
 protected:
  Instance inst_ = oracle::Exip();
  ValueStack stack_ = BuildStack(inst_);
  SolutionDag dag_{inst_, stack_};
};

TEST_F(ExipSolutions, OneOptimumExamples) {
  const Solution s = OneOptimum(dag_, 6, Point{1, 1});
  EXPECT_EQ(s.x, (std::vector<Value>{0, 0, 0, 1, 0, 0}));
  EXPECT_EQ(s.value, 3);
  const Solution t = OneOptimum(dag_, 3, Point{3, 3});
  EXPECT_EQ(t.x, (std::vector<Value>{0, 1, 1}));
  EXPECT_EQ(t.value, 7);
  EXPECT_EQ(t.usage, (Point{3, 3}));
}

TEST_F(ExipSolutions, AllOptimaExamples) {
  EXPECT_EQ(AsSet(AllOptima(dag_, 3, Point{3, 3})), (std::set<std::vector<Value>>{{0, 1, 1}}));
  EXPECT_EQ(AsSet(AllOptima(dag_, 5, Point{2, 2})), (std::set<std::vector<Value>>{{0, 0, 0, 2, 0}}));
  EXPECT_EQ(AsSet(AllOptima(dag_, 6, Point{2, 2})),
            (std::set<std::vector<Value>>{{0, 0, 0, 2, 0, 0}, {0, 0, 0, 0, 0, 1}}));
  EXPECT_EQ(AsSet(AllOptima(dag_, 6, Point{1, 1})), (std::set<std::vector<Value>>{{0, 0, 0, 1, 0, 0}}));
  EXPECT_EQ(AsSet(AllOptima(dag_, 0, Point{3, 3})), (std::set<std::vector<Value>>{{}}));
}

TEST_F(ExipSolutions, AllOptimaMatchesOracleEverywhere) {
  for (std::size_t k = 0; k <= inst_.n(); ++k) {
    stack_.box().ForEach([&](std::size_t, const Point& beta) {
      const OptimaSet opt = AllOptima(dag_, k, beta);
      EXPECT_FALSE(opt.truncated);
      EXPECT_EQ(opt.solutions.size(), AsSet(opt).size());
      EXPECT_EQ(AsSet(opt), oracle::Optima(inst_, k, beta)) << "k=" << k << " " << FormatPoint(beta);
      const Solution one = OneOptimum(dag_, k, beta);
      EXPECT_TRUE(AsSet(opt).count(one.x));
    });
  }
}

TEST_F(ExipSolutions, CapTruncates) {
  const OptimaSet opt = AllOptima(dag_, 6, Point{2, 2}, 1);
  EXPECT_TRUE(opt.truncated);
  EXPECT_EQ(opt.solutions.size(), 1u);
}

TEST_F(ExipSolutions, ColumnUsageMatchesOracle) {
  for (std::size_t k = 1; k <= inst_.n(); ++k) {
    for (std::size_t j = 0; j < k; ++j) {
      const std::vector<bool> used = ColumnUsage(dag_, k, j);
      stack_.box().ForEach([&](std::size_t idx, const Point& beta) {
        bool expected = false;
        for (const auto& x : oracle::Optima(inst_, k, beta)) expected = expected || x[j] > 0;
        EXPECT_EQ(used[idx], expected) << "k=" << k << " j=" << j << " " << FormatPoint(beta);
      });
    }
  }
}

TEST_F(ExipSolutions, DecomposeExample) {
  const DecompositionReport r = Decompose(inst_, stack_, 3, Point{3, 3}, {0, 1, 1}, {0, 1, 0});
  EXPECT_EQ(r.partial_usage, (Point{2, 1}));
  EXPECT_EQ(r.z_partial, 3);
  EXPECT_EQ(r.z_residual, 4);
  EXPECT_EQ(r.z_beta, 7);
}

TEST_F(ExipSolutions, DecomposeRejectsNonOptimal) {
  EXPECT_THROW(Decompose(inst_, stack_, 3, Point{3, 3}, {1, 0, 0}, {0, 0, 0}), Error);
  EXPECT_THROW(Decompose(inst_, stack_, 3, Point{3, 3}, {0, 1, 1}, {1, 0, 0}), Error);
}

TEST_F(ExipSolutions, StepDownExamples) {
  const StepDownResult a = StepDown(inst_, stack_, 3, Point{3, 3}, {0, 1, 1}, 1);
  EXPECT_EQ(a.point, (Point{2, 1}));
  EXPECT_EQ(a.value, 3);
  const StepDownResult b = StepDown(inst_, stack_, 4, Point{2, 2}, {0, 0, 0, 2}, 2);
  EXPECT_EQ(b.point, (Point{0, 0}));
  EXPECT_EQ(b.value, 0);
  try {
    StepDown(inst_, stack_, 4, Point{2, 2}, {0, 0, 0, 2}, 3);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kPrecondition);
  }
}

TEST(SolutionsRandomTest, OptimaMatchOracle) {
  std::mt19937_64 rng(oracle::kRandomSeed);
  for (int i = 0; i < 60; ++i) {
    const Instance inst = oracle::RandomInstance(rng, i);
    const ValueStack stack = BuildStack(inst);
    const SolutionDag dag(inst, stack);
    const std::size_t n = inst.n();
    stack.box().ForEach([&](std::size_t, const Point& beta) {
      const auto expected = oracle::Optima(inst, n, beta);
      if (expected.size() > 500) return;
      EXPECT_EQ(AsSet(AllOptima(dag, n, beta)), expected) << inst.name << " " << FormatPoint(beta);
    });
  }
}

TEST(SolutionDagTest, NeedsAllLevels) {
  const Instance inst = oracle::Exip();
  const ValueStack stack = BuildStack(inst, Retention::kFinalOnly);
  EXPECT_THROW(SolutionDag(inst, stack), Error);
}

}  // namespace
}  // namespace vflat
