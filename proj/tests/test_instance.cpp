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

#include <string>
#include <vector>

#include "oracle.hpp"
#include "vflat/columns.hpp"
#include "vflat/instance.hpp"
#include "vflat/value_table.hpp"

namespace vflat {
namespace {

constexpr const char* kExipDoc = R"({
  "name": "EXIP",
  "A": [[1, 2, 1, 1, 1, 2], [1, 1, 2, 1, 3, 2]],
  "c": [2, 3, 4, 3, 3, 6],
  "b": [3, 3]
})";

ErrorKind KindOf(const std::string& text) {
  try {
    ParseInstance(text);
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error for " << text;
  return ErrorKind::kInternal;
}

TEST(ParseInstanceTest, ReadsExip) {
  const Instance inst = ParseInstance(kExipDoc);
  EXPECT_EQ(inst.name, "EXIP");
  EXPECT_EQ(inst.m(), 2u);
  EXPECT_EQ(inst.n(), 6u);
  EXPECT_EQ(inst.columns[1], (Point{2, 1}));
  EXPECT_EQ(inst.columns[4], (Point{1, 3}));
  EXPECT_EQ(inst.c, (std::vector<Value>{2, 3, 4, 3, 3, 6}));
  EXPECT_EQ(inst.b, (Point{3, 3}));
}

TEST(ParseInstanceTest, NameIsOptional) {
  const Instance inst = ParseInstance(R"({"A": [[1]], "c": [1], "b": [2]})");
  EXPECT_TRUE(inst.name.empty());
  EXPECT_EQ(inst.n(), 1u);
}

TEST(ParseInstanceTest, RejectsMalformedDocuments) {
  EXPECT_EQ(KindOf("{"), ErrorKind::kInvalidInput);
  EXPECT_EQ(KindOf(std::string(kExipDoc) + " {}"), ErrorKind::kInvalidInput);
  EXPECT_EQ(KindOf("[1, 2]"), ErrorKind::kInvalidInput);
  EXPECT_EQ(KindOf(R"({"A": [[1]], "c": [1]})"), ErrorKind::kInvalidInput);
  EXPECT_EQ(KindOf(R"({"A": [[1]], "c": [1], "b": [2], "extra": 1})"), ErrorKind::kInvalidInput);
  EXPECT_EQ(KindOf(R"({"A": [[1, 2], [1]], "c": [1, 1], "b": [2, 2]})"), ErrorKind::kInvalidInput);
  EXPECT_EQ(KindOf(R"({"A": [[1, 2]], "c": [1], "b": [2]})"), ErrorKind::kInvalidInput);
  EXPECT_EQ(KindOf(R"({"A": [[1.5]], "c": [1], "b": [2]})"), ErrorKind::kInvalidInput);
}

TEST(ParseInstanceTest, AssumptionViolationsAreValidationErrors) {
  EXPECT_EQ(KindOf(R"({"A": [[0, 1]], "c": [1, 1], "b": [2]})"), ErrorKind::kValidation);
  EXPECT_EQ(KindOf(R"({"A": [[3]], "c": [1], "b": [2]})"), ErrorKind::kValidation);
  EXPECT_EQ(KindOf(R"({"A": [[1]], "c": [-1], "b": [2]})"), ErrorKind::kValidation);
  EXPECT_EQ(KindOf(R"({"A": [[-1]], "c": [1], "b": [2]})"), ErrorKind::kValidation);
}

TEST(ValidateTest, ExipIsClean) { EXPECT_TRUE(Validate(oracle::Exip()).ok()); }

TEST(ValidateTest, ReportsEveryViolation) {
  Instance inst = oracle::Exip();
  inst.columns[2] = {0, 0};
  inst.columns[5] = {4, 1};
  inst.c[1] = -2;
  const ValidationReport report = Validate(inst);
  ASSERT_EQ(report.violations.size(), 3u);
  EXPECT_EQ(report.violations[0].code, "zero_column");
  EXPECT_EQ(report.violations[0].indices, (std::vector<std::size_t>{3}));
  EXPECT_EQ(report.violations[1].code, "column_exceeds_b");
  EXPECT_EQ(report.violations[1].indices, (std::vector<std::size_t>{6}));
  EXPECT_EQ(report.violations[2].code, "negative_objective");
  EXPECT_EQ(report.violations[2].indices, (std::vector<std::size_t>{2}));
  EXPECT_THROW(RequireValid(inst), ValidationError);
}

TEST(ToJsonTest, RoundTrips) {
  const Instance inst = oracle::Exip();
  const Instance back = ParseInstance(ToJson(inst).dump());
  EXPECT_EQ(back.name, inst.name);
  EXPECT_EQ(back.columns, inst.columns);
  EXPECT_EQ(back.c, inst.c);
  EXPECT_EQ(back.b, inst.b);
}

TEST(OrderColumnsTest, ExipPermutation) {
  const OrderedInstance ordered = OrderColumns(oracle::Exip());
  EXPECT_EQ(ordered.permutation, (std::vector<std::size_t>{0, 3, 2, 1, 4, 5}));
  EXPECT_EQ(ordered.instance.columns,
            (std::vector<Point>{{1, 1}, {1, 1}, {1, 2}, {2, 1}, {1, 3}, {2, 2}}));
  EXPECT_EQ(ordered.instance.c, (std::vector<Value>{2, 3, 4, 3, 3, 6}));
  EXPECT_TRUE(OrderingViolations(ordered.instance).empty());
}

TEST(OrderColumnsTest, NoEarlierColumnDominatesALaterOne) {
  std::mt19937_64 rng(oracle::kRandomSeed);
  for (int i = 0; i < oracle::kRandomCount; ++i) {
    const Instance inst = oracle::RandomInstance(rng, i);
    const OrderedInstance ordered = OrderColumns(inst);
    const auto& cols = ordered.instance.columns;
    for (std::size_t j = 0; j < cols.size(); ++j) {
      for (std::size_t l = j + 1; l < cols.size(); ++l) {
        EXPECT_FALSE(StrictlyDominated(cols[l], cols[j])) << inst.name;
        EXPECT_EQ(cols[j], inst.columns[ordered.permutation[j]]);
      }
    }
  }
}

TEST(OrderingViolationsTest, FlagsUnorderedPairs) {
  EXPECT_FALSE(OrderingViolations(oracle::Exip()).empty());
}

TEST(SelectColumnsTest, KeepsSubset) {
  const Instance sub = SelectColumns(oracle::Exip(), {3, 5});
  EXPECT_EQ(sub.columns, (std::vector<Point>{{1, 1}, {2, 2}}));
  EXPECT_EQ(sub.c, (std::vector<Value>{3, 6}));
}

TEST(ClassifyColumnsTest, ExipTags) {
  const OrderedInstance ordered = OrderColumns(oracle::Exip());
  const ValueStack stack = BuildStack(ordered.instance);
  const ColumnClassification cls = ClassifyColumns(ordered.instance, stack, ordered.permutation);
  std::vector<ColumnCase> tags;
  for (const auto& c : cls.columns) tags.push_back(c.tag);
  EXPECT_EQ(tags, (std::vector<ColumnCase>{ColumnCase::kBelow, ColumnCase::kBelow,
                                           ColumnCase::kBelow, ColumnCase::kEqual,
                                           ColumnCase::kAbove, ColumnCase::kEqual}));
  EXPECT_EQ(cls.NecessaryOriginal(), (std::vector<std::size_t>{3, 2, 5}));
}

TEST(ClassifyColumnsTest, AgreesWithOracle) {
  const OrderedInstance ordered = OrderColumns(oracle::Exip());
  const Instance& inst = ordered.instance;
  const ValueStack stack = BuildStack(inst);
  const ColumnClassification cls = ClassifyColumns(inst, stack, ordered.permutation);
  for (std::size_t k = 1; k <= inst.n(); ++k) {
    const Point& a = inst.columns[k - 1];
    EXPECT_EQ(cls.columns[k - 1].previous_value, oracle::Value(inst, k - 1, a));
    EXPECT_EQ(cls.columns[k - 1].lsm, oracle::Lsm(inst, k, a));
    EXPECT_EQ(cls.columns[k - 1].necessary,
              oracle::Value(inst, inst.n(), a) == inst.c[k - 1] && oracle::Lsm(inst, inst.n(), a));
  }
}

TEST(ClassifyColumnsTest, RequiresOrderedColumns) {
  const Instance inst = oracle::Exip();
  EXPECT_THROW(ClassifyColumns(inst, BuildStack(inst)), Error);
}

}  // namespace
}  // namespace vflat
