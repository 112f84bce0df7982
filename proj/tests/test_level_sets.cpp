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
#include <string>
#include <vector>

#include "oracle.hpp"
#include "vflat/level_sets.hpp"
#include "vflat/solutions.hpp"
#include "vflat/value_table.hpp"

namespace vflat {
namespace {

std::set<Point> AsSet(const std::vector<Point>& pts) { return {pts.begin(), pts.end()}; }

class ExipLevelSets : public ::testing::Test {
 protected:
  Instance inst_ = oracle::Exip();
  ValueStack stack_ = BuildStack(inst_);
  SolutionDag dag_{inst_, stack_};
};

class ExipTall : public ::testing::Test {
 protected:
  Instance inst_ = oracle::Exip(Point{3, 4});
  ValueStack stack_ = BuildStack(inst_);
  SolutionDag dag_{inst_, stack_};
};

TEST_F(ExipLevelSets, LevelSetExamples) {
  EXPECT_EQ(AsSet(ComputeLevelSet(stack_, 6, 3).members), (std::set<Point>{{1, 1}, {2, 1}, {3, 1}}));
  EXPECT_EQ(ComputeLevelSet(stack_, 6, 0).members.size(), 7u);
  EXPECT_TRUE(ComputeLevelSet(stack_, 6, 1).members.empty());
}

TEST_F(ExipLevelSets, LevelSetsPartitionTheBox) {
  for (std::size_t k = 0; k <= inst_.n(); ++k) {
    std::size_t total = 0;
    for (Value alpha : LevelValueSet(stack_, k)) total += ComputeLevelSet(stack_, k, alpha).members.size();
    EXPECT_EQ(total, stack_.box().cell_count());
  }
}

TEST_F(ExipLevelSets, LsmExamples) {
  EXPECT_TRUE(IsLsm(stack_, 2, Point{2, 1}));
  EXPECT_FALSE(IsLsm(stack_, 6, Point{2, 1}));
  EXPECT_TRUE(IsLsm(stack_, 6, Point{0, 0}));
  EXPECT_TRUE(IsLsm(stack_, 6, Point{1, 1}));
  EXPECT_EQ(AsSet(ComputeLsmSet(stack_, 6).Members()),
            (std::set<Point>{{0, 0}, {1, 1}, {1, 2}, {2, 2}, {2, 3}, {3, 3}}));
}

TEST_F(ExipLevelSets, LsmSetsMatchOracle) {
  for (std::size_t k = 0; k <= inst_.n(); ++k) {
    EXPECT_EQ(AsSet(ComputeLsmSet(stack_, k).Members()), oracle::LsmSet(inst_, k)) << "k=" << k;
  }
}

TEST_F(ExipTall, MembershipExamples) {
  EXPECT_TRUE(IsLsm(stack_, 3, Point{3, 3}));
  EXPECT_TRUE(IsLsm(stack_, 4, Point{3, 3}));
  EXPECT_TRUE(IsLsm(stack_, 5, Point{3, 3}));
  EXPECT_TRUE(IsLsm(stack_, 2, Point{2, 1}));
}

TEST(ExactRankTest, SmallMatrices) {
  EXPECT_EQ(ExactRank({{1, 1}, {2, 1}}), 2u);
  EXPECT_EQ(ExactRank({{1, 2}, {2, 4}}), 1u);
  EXPECT_EQ(ExactRank({{1, 1}, {2, 1}, {1, 2}}), 2u);
  EXPECT_EQ(ExactRank({{0, 0}, {0, 0}}), 0u);
  EXPECT_EQ(ExactRank({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}}), 2u);
  EXPECT_EQ(ExactRank({{2, 1, 0}, {0, 3, 1}, {1, 0, 5}}), 3u);
}

TEST_F(ExipTall, PersistenceWithPremise) {
  const PersistenceCheck r = CheckLsmPersistence(stack_, dag_, 5, Point{3, 3});
  EXPECT_TRUE(r.premise_holds);
  EXPECT_TRUE(r.membership_asserted);
}

TEST_F(ExipLevelSets, PersistenceWithDuplicateColumnPremiseFails) {
  const PersistenceCheck r = CheckLsmPersistence(stack_, dag_, 4, Point{3, 3});
  EXPECT_FALSE(r.premise_holds);
  EXPECT_FALSE(r.membership_asserted);
  ASSERT_TRUE(r.witness_solution.has_value());
  EXPECT_GT(r.witness_solution->x[3], 0);
  EXPECT_TRUE(oracle::Lsm(inst_, 4, {3, 3}));
}

TEST_F(ExipLevelSets, PersistenceNeedsPreviousMembership) {
  try {
    CheckLsmPersistence(stack_, dag_, 6, Point{2, 1});
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kPrecondition);
  }
}

TEST_F(ExipLevelSets, PersistenceHoldsWhereverItApplies) {
  for (std::size_t k = 1; k <= inst_.n(); ++k) {
    for (const Point& beta : ComputeLsmSet(stack_, k - 1).Members()) {
      EXPECT_NO_THROW(CheckLsmPersistence(stack_, dag_, k, beta));
    }
  }
}

// beta = (0,1) is not in B_1 and a_1, a_2 are independent, yet
// (0,1) + a_2 = (2,2) = 2 a_1 is in B_2. The oracle confirms every fact.
TEST_F(ExipLevelSets, RayExclusionAsStatedIsRefuted) {
  EXPECT_FALSE(oracle::Lsm(inst_, 1, {0, 1}));
  EXPECT_TRUE(oracle::Lsm(inst_, 2, {2, 2}));
  try {
    LsmRayExclusion(inst_, stack_, 2, Point{0, 1});
    FAIL() << "expected a claim violation";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kClaimViolation);
    EXPECT_NE(std::string(e.what()).find("point=(2,2)"), std::string::npos) << e.what();
  }
}

TEST_F(ExipLevelSets, RayExclusionWithSpanHypothesisDeclinesThere) {
  const RayExclusion r = LsmRayExclusion(inst_, stack_, 2, Point{0, 1}, RayHypothesis::kSpanRestricted);
  EXPECT_TRUE(r.declined);
}

TEST_F(ExipLevelSets, RayExclusionDeclines) {
  EXPECT_TRUE(LsmRayExclusion(inst_, stack_, 2, Point{0, 0}).declined);
  EXPECT_TRUE(LsmRayExclusion(inst_, stack_, 3, Point{1, 0}).declined);
  EXPECT_TRUE(LsmRayExclusion(inst_, stack_, 1, Point{2, 2}).declined);
}

TEST(RayExclusionRandomTest, SpanRestrictedFormHolds) {
  std::mt19937_64 rng(oracle::kRandomSeed);
  for (int i = 0; i < oracle::kRandomCount; ++i) {
    const Instance inst = oracle::RandomInstance(rng, i);
    const ValueStack stack = BuildStack(inst);
    for (std::size_t k = 1; k <= inst.n(); ++k) {
      stack.box().ForEach([&](std::size_t, const Point& beta) {
        EXPECT_NO_THROW(LsmRayExclusion(inst, stack, k, beta, RayHypothesis::kSpanRestricted))
            << inst.name << " k=" << k << " " << FormatPoint(beta);
      });
    }
  }
}

TEST_F(ExipTall, StepDownToPreviousLevel) {
  EXPECT_EQ(LsmStepDown(stack_, dag_, 3, Point{3, 3}), (Point{2, 1}));
  EXPECT_TRUE(IsLsm(stack_, 2, Point{2, 1}));
}

TEST_F(ExipTall, DownwardClosure) {
  const std::set<Point> got = AsSet(LsmDownwardClosure(stack_, dag_, 3, {0, 1, 1}));
  for (const Point& p : {Point{0, 0}, Point{2, 1}, Point{1, 2}}) {
    EXPECT_TRUE(got.count(p)) << FormatPoint(p);
    EXPECT_TRUE(oracle::Lsm(inst_, 3, p)) << FormatPoint(p);
  }
}

TEST_F(ExipLevelSets, RayPrefix) {
  const RayPrefix r = LsmRayPrefix(inst_, stack_, 6, Point{0, 0}, 1);
  EXPECT_FALSE(r.declined);
  EXPECT_EQ(r.asserted, (std::vector<Point>{{0, 0}, {2, 2}}));
  EXPECT_TRUE(LsmRayPrefix(inst_, stack_, 6, Point{0, 0}, 2).declined);
}

TEST_F(ExipLevelSets, RecursiveCover) {
  for (std::size_t k = 1; k <= inst_.n(); ++k) {
    const RecursiveCover cover = RelationshipCover(stack_, dag_, k);
    EXPECT_TRUE(cover.holds) << "k=" << k;
    for (const auto& w : cover.witnesses) {
      EXPECT_EQ(Offset(w.base, inst_.columns[k - 1], w.t), w.beta);
      EXPECT_TRUE(oracle::Lsm(inst_, k - 1, w.base));
    }
  }
}

TEST_F(ExipLevelSets, SaturationMatchesOracle) {
  const SaturationResult r = LsmSaturation(stack_);
  std::optional<std::size_t> first;
  const std::size_t cells = stack_.box().cell_count();
  for (std::size_t k = 0; k <= inst_.n() && !first; ++k) {
    if (oracle::LsmSet(inst_, k).size() == cells) first = k;
  }
  EXPECT_EQ(r.first, first);
  EXPECT_TRUE(r.persists);
}

TEST_F(ExipLevelSets, UnusedColumns) {
  const UnusedColumnReport r = UnusedColumnFilter(stack_, dag_, 6);
  EXPECT_TRUE(r.holds);
  EXPECT_NE(std::find(r.excluded_columns.begin(), r.excluded_columns.end(), 1u), r.excluded_columns.end());
  EXPECT_EQ(std::find(r.excluded_columns.begin(), r.excluded_columns.end(), 0u), r.excluded_columns.end());
  for (const Point& beta : ComputeLsmSet(stack_, 6).Members()) {
    for (const auto& x : oracle::Optima(inst_, 6, beta)) EXPECT_EQ(x[1], 0);
  }
}

}  // namespace
}  // namespace vflat
