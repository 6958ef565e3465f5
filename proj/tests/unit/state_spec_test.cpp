// Copyright 2026 The netsteer Authors
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

#include <gtest/gtest.h>

#include "netsteer/errors.hpp"
#include "netsteer/state_spec.hpp"
#include "test_util.hpp"

namespace netsteer {
namespace {

TEST(StateSpecTest, ParsesEveryKind) {
  const auto net = parse_state_spec_text(R"({
    "n": 4,
    "sources": [
      {"kind": "werner", "p": 0.7},
      {"kind": "bell_diagonal", "c": [0.5, -0.2, 0.1]},
      {"kind": "general", "a": [0, 0, 0.1], "b": [0, 0, 0], "C": [[0.2, 0, 0], [0, 0.2, 0], [0, 0, 0.2]]},
      {"kind": "raw", "rho": [[0.25, 0, 0, 0], [0, 0.25, 0, 0], [0, 0, 0.25, 0], [0, 0, 0, [0.25, 0]]]}
    ]})");
  ASSERT_EQ(net.size(), 4u);
  EXPECT_EQ(net.source(0).kind(), SourceKind::werner);
  EXPECT_EQ(net.source(1).kind(), SourceKind::bell_diagonal);
  EXPECT_EQ(net.source(2).kind(), SourceKind::general);
  EXPECT_EQ(net.source(3).kind(), SourceKind::raw);
  EXPECT_TRUE(testing::matrices_near(net.source(0).rho(), make_werner(0.7).rho(), 0.0));
}

TEST(StateSpecTest, RoundTripsThroughJson) {
  const auto net = parse_state_spec_text(
      R"({"n": 2, "sources": [{"kind": "werner", "p": 0.3}, {"kind": "bell_diagonal", "c": [0.1, 0.2, -0.3]}]})");
  const auto again = parse_state_spec(network_to_json(net));
  for (std::size_t k = 0; k < 2; ++k)
    EXPECT_TRUE(testing::matrices_near(net.source(k).rho(), again.source(k).rho(), 0.0));
}

TEST(StateSpecTest, RejectsMalformedJson) {
  EXPECT_THROW(parse_state_spec_text("{\"n\": 2, "), ValidationError);
}

TEST(StateSpecTest, RejectsCountMismatch) {
  EXPECT_THROW(parse_state_spec_text(R"({"n": 2, "sources": [{"kind": "werner", "p": 0.3}]})"),
               ValidationError);
}

TEST(StateSpecTest, RejectsUnknownKindAndMissingFields) {
  EXPECT_THROW(parse_state_spec_text(R"({"n": 1, "sources": [{"kind": "ghz"}]})"), ValidationError);
  EXPECT_THROW(parse_state_spec_text(R"({"n": 1, "sources": [{"kind": "werner"}]})"),
               ValidationError);
  EXPECT_THROW(parse_state_spec_text(R"({"n": 1, "sources": [{"kind": "bell_diagonal", "c": [1, 2]}]})"),
               ValidationError);
}

TEST(StateSpecTest, PsdViolationNamesTheSource) {
  try {
    parse_state_spec_text(
        R"({"n": 2, "sources": [{"kind": "werner", "p": 0.3}, {"kind": "bell_diagonal", "c": [1, 1, 1]}]})");
    FAIL() << "expected PsdError";
  } catch (const PsdError& e) {
    EXPECT_NE(std::string(e.what()).find("source 1"), std::string::npos);
    EXPECT_NEAR(e.min_eigenvalue(), -0.5, 1e-12);
  }
}

TEST(StateSpecTest, MissingFileIsValidationError) {
  EXPECT_THROW(load_state_spec("/nonexistent/spec.json"), ValidationError);
}

}  // namespace
}  // namespace netsteer
