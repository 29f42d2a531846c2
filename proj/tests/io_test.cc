// Copyright 2026 The Friendfoe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <sstream>
#include <string>

#include "friendfoe/format.h"
#include "friendfoe/game_io.h"
#include "gtest/gtest.h"

namespace friendfoe {
namespace {

constexpr char kSkewedGameJson[] = R"({
  "utility": [[1, 0], [0, 1]],
  "agent_labels": ["left", "right"],
  "env_labels": ["up", "down"],
  "q_agent": [0.9, 0.1],
  "q_env": [0.1, 0.9],
  "alpha": 10,
  "beta": -10
})";

TEST(GameJsonTest, Parses) {
  Game game = ParseGameJson(kSkewedGameJson);
  EXPECT_EQ(game.utility(), Matrix::Identity(2));
  EXPECT_EQ(game.prior_agent().labels()[1], "right");
  EXPECT_EQ(game.prior_env()[1], 0.9);
  EXPECT_EQ(game.alpha(), 10.0);
  EXPECT_EQ(game.beta(), -10.0);
}

TEST(GameJsonTest, LabelsAreOptional) {
  Game game = ParseGameJson(
      R"({"utility": [[2]], "q_agent": [1], "q_env": [1], "alpha": 0, "beta": 0})");
  EXPECT_EQ(game.prior_agent().labels()[0], "0");
}

TEST(GameJsonTest, RoundTrip) {
  Game game = ParseGameJson(kSkewedGameJson);
  Game again = ParseGameJson(GameToJson(game));
  EXPECT_EQ(again.utility(), game.utility());
  EXPECT_EQ(again.prior_agent().labels(), game.prior_agent().labels());
  EXPECT_EQ(again.prior_env()[0], game.prior_env()[0]);
  EXPECT_EQ(again.beta(), game.beta());
}

TEST(GameJsonTest, MalformedInputs) {
  EXPECT_THROW(ParseGameJson("{not json"), ParseError);
  EXPECT_THROW(ParseGameJson(R"({"utility": [[1]]})"), ParseError);
  EXPECT_THROW(
      ParseGameJson(
          R"({"utility": "x", "q_agent": [1], "q_env": [1], "alpha": 0, "beta": 0})"),
      ParseError);
}

TEST(GameJsonTest, InvalidContentsAreNotParseErrors) {
  try {
    ParseGameJson(
        R"({"utility": [[1]], "q_agent": [0.5], "q_env": [1], "alpha": 0, "beta": 0})");
    FAIL() << "expected an error";
  } catch (const ParseError&) {
    FAIL() << "contents error reported as a parse error";
  } catch (const Error&) {
  }
}

TEST(StrategiesJsonTest, RoundTrip) {
  auto s = ParseStrategiesJson(R"({"a": [1, 0], "b": [0.5, 0.5]})");
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s.at("b")[1], 0.5);
  auto again = ParseStrategiesJson(StrategiesToJson(s));
  EXPECT_EQ(again.at("a")[0], 1.0);
}

TEST(InteractionCsvTest, RoundTrip) {
  auto strategies = ParseStrategiesJson(R"({"a": [1, 0], "b": [0.5, 0.5]})");
  std::istringstream in("strategy_id,x,z\r\na,0,1\nb,1,0\n\n");
  InteractionLog log = ReadInteractionCsv(in, strategies);
  ASSERT_EQ(log.records.size(), 2u);
  EXPECT_EQ(log.records[1].strategy_id, "b");
  EXPECT_EQ(log.records[0].z, 1u);
  std::ostringstream out;
  WriteInteractionCsv(out, log);
  EXPECT_EQ(out.str(), "strategy_id,x,z\na,0,1\nb,1,0\n");
}

TEST(InteractionCsvTest, Errors) {
  std::istringstream bad_header("id,x,z\na,0,1\n");
  EXPECT_THROW(ReadInteractionCsv(bad_header, {}), ParseError);
  std::istringstream bad_index("strategy_id,x,z\na,zero,1\n");
  EXPECT_THROW(ReadInteractionCsv(bad_index, {}), ParseError);
  std::istringstream short_row("strategy_id,x,z\na,0\n");
  EXPECT_THROW(ReadInteractionCsv(short_row, {}), ParseError);
  std::istringstream empty("");
  EXPECT_THROW(ReadInteractionCsv(empty, {}), ParseError);
}

TEST(PosteriorCsvTest, Format) {
  std::ostringstream out;
  WritePosteriorCsv(out, BetaPosterior({-1.0, 0.5}, {0.0, 0.0}));
  EXPECT_EQ(out.str(), "beta,posterior_weight\n-1,0.5\n0.5,0.5\n");
}

TEST(FormatTest, Numbers) {
  EXPECT_EQ(FormatNumber(0.1), "0.1");
  EXPECT_EQ(FormatNumber(-0.0), "0");
  EXPECT_EQ(FormatNumber(-INFINITY), "-inf");
  EXPECT_EQ(FormatNumber(std::optional<double>()), "");
  EXPECT_EQ(FormatNumber(1e-300), "1e-300");
}

TEST(FormatTest, NumberLists) {
  EXPECT_EQ(ParseNumberList("0, 1,-1,+2.5"),
            (std::vector<double>{0.0, 1.0, -1.0, 2.5}));
  EXPECT_TRUE(ParseNumberList("").empty());
  EXPECT_THROW(ParseNumberList("1,,2"), Error);
  EXPECT_THROW(ParseNumberList("1,x"), Error);
}

TEST(FormatTest, ArangeIsInclusiveAndSnapped) {
  auto v = Arange(-3.0, 3.0, 0.1);
  ASSERT_EQ(v.size(), 61u);
  EXPECT_EQ(v[0], -3.0);
  EXPECT_EQ(v[30], 0.0);
  EXPECT_EQ(v[31], 0.1);
  EXPECT_EQ(v.back(), 3.0);
  EXPECT_EQ(Arange(-3.0, 3.0, 0.25).size(), 25u);
}

}  // namespace
}  // namespace friendfoe
