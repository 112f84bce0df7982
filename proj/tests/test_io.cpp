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

#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "vflat/io.hpp"

namespace vflat {
namespace {

std::vector<std::string> Lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

TEST(ValueTableCsvTest, LayoutForOneLevel) {
  const ValueStack stack = BuildStack(oracle::Exip());
  const std::vector<std::string> lines = Lines(ValueTableCsv(stack, 6));
  ASSERT_EQ(lines.size(), 17u);
  EXPECT_EQ(lines[0], "beta_1,beta_2,k,z");
  EXPECT_EQ(lines[1], "0,0,6,0");
  EXPECT_EQ(lines[16], "3,3,6,9");
  EXPECT_EQ(Lines(ValueTableCsv(stack)).size(), 1u + 7u * 16u);
}

TEST(ValueTableCsvTest, RoundTripIsLossless) {
  for (Point b : {Point{3, 3}, Point{6, 6}}) {
    const ValueStack stack = BuildStack(oracle::Exip(b));
    const ParsedValueTables parsed = ParseValueTableCsv(ValueTableCsv(stack));
    EXPECT_EQ(parsed.m, 2u);
    ASSERT_EQ(parsed.levels.size(), 7u);
    for (const auto& [k, cells] : parsed.levels) {
      ASSERT_EQ(cells.size(), stack.box().cell_count());
      for (const auto& [beta, z] : cells) EXPECT_EQ(stack.At(k, beta), z);
    }
  }
}

TEST(ValueTableCsvTest, SlidingRetentionWritesRetainedLevels) {
  const ValueStack stack = BuildStack(oracle::Exip(), Retention::kFinalOnly);
  const ParsedValueTables parsed = ParseValueTableCsv(ValueTableCsv(stack));
  ASSERT_EQ(parsed.levels.size(), 1u);
  EXPECT_EQ(parsed.levels.begin()->first, 6u);
}

TEST(ValueTableCsvTest, RejectsMalformedCsv) {
  EXPECT_THROW(ParseValueTableCsv(""), Error);
  EXPECT_THROW(ParseValueTableCsv("a,b\n"), Error);
  EXPECT_THROW(ParseValueTableCsv("beta_1,k,z\n1,2\n"), Error);
  EXPECT_THROW(ParseValueTableCsv("beta_1,k,z\n1,x,3\n"), Error);
}

TEST(ComponentCsvTest, RowForTwoOne) {
  const ValueStack stack = BuildStack(oracle::Exip());
  const ComponentMap map = LabelComponents(stack);
  const std::vector<std::string> lines = Lines(ComponentCsv(map));
  ASSERT_EQ(lines.size(), 17u);
  EXPECT_EQ(lines[0], "beta_1,beta_2,component,z");
  const std::string id = std::to_string(map.Label(Point{1, 1}));
  EXPECT_EQ(lines[1 + stack.box().Index(Point{2, 1})], "2,1," + id + ",3");
}

TEST(HeatmapTest, PlainGraymap) {
  const ValueStack stack = BuildStack(oracle::Exip());
  const std::vector<std::string> lines = Lines(ValueHeatmapPgm(stack, 6));
  ASSERT_EQ(lines.size(), 8u);
  EXPECT_EQ(lines[0], "P2");
  EXPECT_EQ(lines[2], "4 4");
  EXPECT_EQ(lines[3], "255");
  const Instance inst = oracle::Exip();
  for (Coord row = 3; row >= 0; --row) {
    std::string expected;
    for (Coord col = 0; col <= 3; ++col) {
      const Value z = oracle::Value(inst, 6, {col, row});
      expected += (col > 0 ? " " : "") + std::to_string(z * 255 / 9);
    }
    EXPECT_EQ(lines[4 + 3 - row], expected) << "beta_2=" << row;
  }
}

TEST(HeatmapTest, NeedsTwoDimensions) {
  Instance inst;
  inst.columns = {{1, 1, 1}};
  inst.c = {1};
  inst.b = {2, 2, 2};
  EXPECT_THROW(ValueHeatmapPgm(BuildStack(inst), 1), Error);
}

}  // namespace
}  // namespace vflat
