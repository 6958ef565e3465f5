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
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "netsteer/inequalities.hpp"
#include "netsteer/states.hpp"

namespace netsteer {

/// Maps p in [0, 1] to a network. Must return the same n for every p.
using NetworkFamily = std::function<StarNetwork(double)>;

NetworkFamily werner_family(std::size_t n);

struct ThresholdOptions {
  EvalOptions eval{};
  int max_iterations = 200;
  double residual_tolerance = 1e-8;
  /// Grid points for the monotonicity pre-scan; 0 disables it.
  int prescan_points = 101;
};

struct ThresholdResult {
  InequalityId id;
  std::string family;
  std::size_t n;
  int settings;
  std::optional<Form> form;
  double p_star;
  double residual;
  int iterations;
  double bound;
  std::vector<std::string> warnings;
};

/// Bisection for lhs(p) = bound on [0, 1]. Throws NoCrossingError unless
/// lhs(0) <= bound < lhs(1), or when the residual does not reach tolerance.
ThresholdResult bisect_threshold(const NetworkFamily& family, const std::string& family_name,
                                 InequalityId id, const ThresholdOptions& opts = {});

ThresholdResult werner_threshold(std::size_t n, InequalityId id,
                                 const ThresholdOptions& opts = {});

/// sum over even k >= 2 of C(n, k) p^(k/n), plus 2^(n-1) p.
double odd_n_lhs(std::size_t n, double p);
/// sum over even k >= 2 of C(n, k) p^(k/2), plus 2^(n-1) p^(n/2).
double genuine_lhs(std::size_t n, double p);

double odd_n_rhs(std::size_t n);

/// Root in [0, 1] of odd_n_lhs(n, p) = rhs. Requires odd n >= 3.
double solve_odd_n_equation(std::size_t n);
double solve_odd_n_equation(std::size_t n, double rhs);

/// 2^(-1/n) for two settings; the root of genuine_lhs(n, p) = odd_n_rhs(n)
/// for three settings. Requires n >= 3.
double solve_genuine_equation(std::size_t n, int settings);

namespace cited {
inline constexpr double kNLocalityThreeSettings = 0.8660254037844386;  // sqrt(3)/2
inline constexpr double kNLocalityFourSettings = 0.741;
inline constexpr double kGenuineEntanglementN3 = 0.7154;
}  // namespace cited

enum class SourceTag { computed, paper_cited };

std::string to_string(SourceTag tag);
SourceTag parse_source_tag(std::string_view text);

struct ThresholdRow {
  std::string family;
  std::size_t n;
  int settings;
  std::optional<Form> form;
  double p_star;
  std::optional<double> bound;
  SourceTag source_tag;

  bool operator==(const ThresholdRow&) const = default;
};

ThresholdRow to_row(const ThresholdResult& result);

/// Computed Werner thresholds followed by the cited n-locality and genuine
/// entanglement constants. Families are evaluated on up to `jobs` threads.
std::vector<ThresholdRow> threshold_table(bool with_cited = true, unsigned jobs = 1,
                                          const ThresholdOptions& opts = {});

}  // namespace netsteer
