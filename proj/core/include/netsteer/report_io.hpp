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

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "netsteer/inequalities.hpp"
#include "netsteer/lhs_oracle.hpp"
#include "netsteer/thresholds.hpp"

namespace netsteer {

enum class Format { json, csv };

std::string to_string(Format format);
Format parse_format(std::string_view text);

/// One grid point of a parameter sweep.
struct ScanRow {
  double p;
  InequalityReport report;
};

struct OracleRow {
  std::string model;  // "nlhs" or "blhs"
  InequalityId id;
  std::size_t n;
  int restarts;
  std::uint64_t seed;
  int hidden_values;
  double best;
  double bound;
  int best_restart;
};

/// CSV numbers use 12 significant digits; JSON numbers round-trip exactly.
template <class Row>
std::string write_rows(const std::vector<Row>& rows, Format format);

/// Throws ValidationError on malformed input.
template <class Row>
std::vector<Row> read_rows(std::string_view text, Format format);

/// Locale-independent %.12g.
std::string format_number(double value);
double parse_number(std::string_view text);

}  // namespace netsteer
