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
#include "vflat/decimal.hpp"
#include "vflat/value_table.hpp"

namespace vflat {
namespace {

DecimalPoint Dec(std::vector<std::string> texts) { return ParseDecimalPoint(texts); }

TEST(DecimalTest, ParseAndFloor) {
  EXPECT_EQ(Decimal::Parse("1.7").Floor(), 1);
  EXPECT_EQ(Decimal::Parse("5.9").Floor(), 5);
  EXPECT_EQ(Decimal::Parse("3").Floor(), 3);
  EXPECT_EQ(Decimal::Parse("2.000").Floor(), 2);
  EXPECT_TRUE(Decimal::Parse("2.000").IsInteger());
  EXPECT_FALSE(Decimal::Parse("0.5").IsInteger());
  EXPECT_LT(Decimal::Parse("1.25"), Decimal::Parse("1.3"));
  EXPECT_EQ(Decimal::Parse("1.50"), Decimal::Parse("1.5"));
  EXPECT_THROW(Decimal::Parse("abc"), Error);
  EXPECT_THROW(Decimal::Parse("1..2"), Error);
  EXPECT_THROW(Decimal::Parse(""), Error);
}

TEST(LatticeBoxTest, ColexIndexing) {
  const LatticeBox box(Point{3, 4});
  EXPECT_EQ(box.cell_count(), 20u);
  EXPECT_EQ(box.Index(Point{0, 0}), 0u);
  EXPECT_EQ(box.Index(Point{1, 0}), 1u);
  EXPECT_EQ(box.Index(Point{0, 1}), 4u);
  EXPECT_EQ(box.PointAt(19), (Point{3, 4}));
  EXPECT_THROW(box.CheckedIndex(Point{4, 0}), Error);
  std::size_t expected = 0;
  box.ForEach([&](std::size_t idx, const Point& p) {
    EXPECT_EQ(idx, expected++);
    EXPECT_EQ(box.Index(p), idx);
  });
  EXPECT_EQ(expected, 20u);
}

TEST(BuildStackTest, ExipValues) {
  const ValueStack stack = BuildStack(oracle::Exip());
  EXPECT_EQ(stack.At(3, Point{3, 3}), 7);
  EXPECT_EQ(stack.At(4, Point{3, 3}), 9);
  EXPECT_EQ(stack.At(6, Point{2, 2}), 6);
  EXPECT_EQ(stack.At(2, Point{1, 2}), 2);
  EXPECT_EQ(stack.At(3, Point{1, 2}), 4);
  EXPECT_EQ(stack.At(6, Point{3, 3}), 9);
  EXPECT_EQ(stack.At(1, Point{3, 3}), 6);
  EXPECT_EQ(stack.At(5, Point{2, 2}), 6);
}

TEST(BuildStackTest, ExipMatchesOracleAtEveryLevel) {
  for (Point b : {Point{3, 3}, Point{3, 4}, Point{6, 6}}) {
    const Instance inst = oracle::Exip(b);
    const ValueStack stack = BuildStack(inst);
    for (std::size_t k = 0; k <= inst.n(); ++k) {
      stack.box().ForEach([&](std::size_t, const Point& beta) {
        EXPECT_EQ(stack.At(k, beta), oracle::Value(inst, k, beta))
            << "k=" << k << " beta=" << FormatPoint(beta);
      });
    }
  }
}

TEST(BuildStackTest, SingleVariableRecursionHoldsExhaustively) {
  const Instance inst = oracle::Exip();
  const ValueStack stack = BuildStack(inst);
  for (std::size_t k = 1; k <= inst.n(); ++k) {
    const Point& a = inst.columns[k - 1];
    stack.box().ForEach([&](std::size_t, const Point& beta) {
      Value best = 0;
      for (Value l = 0; Dominated(Offset(Point(a.size(), 0), a, l), beta); ++l) {
        best = std::max(best, stack.At(k - 1, Offset(beta, a, -l)) + l * inst.c[k - 1]);
      }
      EXPECT_EQ(stack.At(k, beta), best);
    });
  }
}

TEST(BuildStackTest, RandomInstancesMatchClassicAndOracle) {
  std::mt19937_64 rng(oracle::kRandomSeed);
  for (int i = 0; i < oracle::kRandomCount; ++i) {
    const Instance inst = oracle::RandomInstance(rng, i);
    const ValueStack stack = BuildStack(inst);
    const std::vector<Value> classic = ClassicGilmoreGomory(inst);
    auto final_table = stack.table(inst.n());
    ASSERT_EQ(classic.size(), final_table.size());
    stack.box().ForEach([&](std::size_t idx, const Point& beta) {
      ASSERT_EQ(final_table[idx], classic[idx]) << inst.name << " " << FormatPoint(beta);
      ASSERT_EQ(final_table[idx], oracle::Value(inst, inst.n(), beta))
          << inst.name << " " << FormatPoint(beta);
    });
  }
}

TEST(BuildStackTest, RetentionModesAgreeOnFinalLevel) {
  const Instance inst = oracle::Exip(Point{6, 6});
  const ValueStack all = BuildStack(inst, Retention::kAllLevels);
  const ValueStack sliding = BuildStack(inst, Retention::kSliding);
  const ValueStack last = BuildStack(inst, Retention::kFinalOnly);
  auto a = all.table(6), s = sliding.table(6), f = last.table(6);
  EXPECT_TRUE(std::equal(a.begin(), a.end(), s.begin(), s.end()));
  EXPECT_TRUE(std::equal(a.begin(), a.end(), f.begin(), f.end()));
  EXPECT_TRUE(sliding.Retained(6));
  EXPECT_FALSE(sliding.Retained(5));
  EXPECT_FALSE(last.Retained(5));
  try {
    last.At(3, Point{1, 1});
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotRetained);
    EXPECT_NE(std::string(e.what()).find("k not retained"), std::string::npos);
  }
}

TEST(BuildStackTest, RejectsInvalidInstance) {
  Instance inst = oracle::Exip();
  inst.columns[0] = {0, 0};
  EXPECT_THROW(BuildStack(inst), ValidationError);
}

TEST(QueryTest, FloorsDecimalRightHandSides) {
  const ValueStack stack = BuildStack(oracle::Exip());
  EXPECT_EQ(Query(stack, 6, Dec({"1.7", "1.2"})), 3);
  EXPECT_EQ(Query(stack, 6, Dec({"1", "1"})), 3);
  EXPECT_EQ(Query(stack, 6, Dec({"0.99", "3"})), 0);
  const ValueStack tall = BuildStack(oracle::Exip(Point{3, 6}));
  EXPECT_EQ(Query(tall, 6, Dec({"0", "5.9"})), 0);
  EXPECT_EQ(Query(stack, 6, Dec({"3.5", "1"})), 3);
  EXPECT_THROW(Query(stack, 6, Dec({"4", "1"})), Error);
  EXPECT_THROW(Query(stack, 6, Dec({"1"})), Error);
  EXPECT_THROW(Query(stack, 7, Dec({"1", "1"})), Error);
}

TEST(LevelValueSetTest, MatchesOracleTable) {
  const Instance inst = oracle::Exip();
  const ValueStack stack = BuildStack(inst);
  for (std::size_t k = 0; k <= inst.n(); ++k) {
    std::set<Value> expected;
    oracle::ForEachPoint(inst.b, [&](const oracle::Vec& p) { expected.insert(oracle::Value(inst, k, p)); });
    const std::vector<Value> got = LevelValueSet(stack, k);
    EXPECT_EQ(std::set<Value>(got.begin(), got.end()), expected) << "k=" << k;
    EXPECT_TRUE(std::is_sorted(got.begin(), got.end()));
  }
  const std::vector<Value> top = LevelValueSet(stack, 6);
  EXPECT_EQ(std::count(top.begin(), top.end(), 1), 0);
}

TEST(BruteForceTest, ValueTableAndOptimaAgreeWithOracle) {
  const Instance inst = oracle::Exip();
  for (std::size_t k = 0; k <= inst.n(); ++k) {
    const std::vector<Value> table = BruteForceTable(inst, k);
    LatticeBox(inst.b).ForEach([&](std::size_t idx, const Point& beta) {
      EXPECT_EQ(table[idx], oracle::Value(inst, k, beta));
      EXPECT_EQ(BruteForceValue(inst, k, beta), table[idx]);
    });
  }
  const auto optima = BruteForceOptima(inst, 6, Point{2, 2});
  const std::set<oracle::Vec> expected = oracle::Optima(inst, 6, {2, 2});
  EXPECT_EQ(std::set<oracle::Vec>(optima.begin(), optima.end()), expected);
  EXPECT_EQ(expected, (std::set<oracle::Vec>{{0, 0, 0, 2, 0, 0}, {0, 0, 0, 0, 0, 1}}));
}

TEST(BruteForceTest, CapIsEnforced) {
  const Instance inst = oracle::Exip(Point{6, 6});
  try {
    BruteForceValue(inst, 6, Point{6, 6}, 10);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kCapExceeded);
  }
}

}  // namespace
}  // namespace vflat
