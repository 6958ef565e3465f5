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

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "netsteer/correlators.hpp"
#include "netsteer/measurements.hpp"
#include "netsteer/states.hpp"

namespace netsteer {

/// Every steering and genuine-steering inequality the library evaluates.
///
///   T1_LINE        n = 2 line network, sum_i |<x^i y^ii z^i>| <= 1
///   T2A_*          two settings (C, or the even-n diagonal pair)
///   T2B_*          three settings (C u C', or the even-n diagonal triple)
///   *_SQ / *_ROOT  exponent 2/n / 1/n
///   T3_CHSH        four central observables, sum_i |J_i|^(1/n) <= 4
///   T4_GEN_*SET    biseparable bound with exponent 1/2, n >= 3
enum class InequalityId {
  T1_LINE,
  T2A_ODD_SQ,
  T2A_ODD_ROOT,
  T2A_EVEN_SQ,
  T2A_EVEN_ROOT,
  T2B_ODD_SQ,
  T2B_ODD_ROOT,
  T2B_EVEN_SQ,
  T2B_EVEN_ROOT,
  T3_CHSH,
  T4_GEN_2SET,
  T4_GEN_3SET,
};

enum class Form { squared, root };

inline constexpr std::array<InequalityId, 12> kAllInequalities{
    InequalityId::T1_LINE,       InequalityId::T2A_ODD_SQ,    InequalityId::T2A_ODD_ROOT,
    InequalityId::T2A_EVEN_SQ,   InequalityId::T2A_EVEN_ROOT, InequalityId::T2B_ODD_SQ,
    InequalityId::T2B_ODD_ROOT,  InequalityId::T2B_EVEN_SQ,   InequalityId::T2B_EVEN_ROOT,
    InequalityId::T3_CHSH,       InequalityId::T4_GEN_2SET,   InequalityId::T4_GEN_3SET};

/// A report counts as a violation only when lhs exceeds the bound by more
/// than this margin.
inline constexpr double kViolationMargin = 1e-9;

std::string to_string(InequalityId id);
std::string to_string(Form form);
/// Throws ValidationError on unknown names.
InequalityId parse_inequality_id(std::string_view name);
Form parse_form(std::string_view name);

/// 3 for T1/T3, otherwise 2 or 3 as encoded in the id.
int settings_count(InequalityId id);
std::optional<Form> form_of(InequalityId id);

/// Throws WrongNError / ParityError when `id` is not defined for n.
void require_applicable(InequalityId id, std::size_t n);
bool is_applicable(InequalityId id, std::size_t n);
std::vector<InequalityId> applicable_inequalities(std::size_t n);

/// Star-inequality id for n's parity.
InequalityId theorem2_id(std::size_t n, int settings, Form form);
InequalityId theorem4_id(int settings);

/// Classical bound of `id` at n.
double inequality_bound(InequalityId id, std::size_t n);

/// sum over each group of |correlator|^exponent; the LHS is the max over
/// groups. Only the even-n two-setting inequalities have more than one group
/// (the three choices of two MUB directions). Not defined for T3_CHSH.
struct CorrelatorSum {
  std::vector<std::vector<SettingString>> groups;
  double exponent;
};
CorrelatorSum correlator_sum(InequalityId id, std::size_t n);

/// Sign patterns (v_1, v_2, v_3) of the four CHSH-type edge combinations
/// v_1 x^1 + v_2 x^2 + v_3 x^3.
inline constexpr std::array<std::array<int, 3>, 4> kChshPatterns{
    {{1, 1, 1}, {1, 1, -1}, {1, -1, 1}, {-1, 1, 1}}};

struct InequalityReport {
  InequalityId id;
  std::size_t n;
  int settings_count;
  std::optional<Form> form;
  double lhs;
  double bound;
  double margin;
  bool violated;
};

InequalityReport make_report(InequalityId id, std::size_t n, double lhs);

struct EvalOptions {
  MubTriple mub = MubTriple::pauli();
  CorrelatorPath path = CorrelatorPath::automatic;
};

InequalityReport eval_theorem1(const StarNetwork& net, const EvalOptions& opts = {});
InequalityReport eval_theorem2(const StarNetwork& net, int settings, Form form,
                               const EvalOptions& opts = {});
InequalityReport eval_theorem3(const StarNetwork& net, const EvalOptions& opts = {});
InequalityReport eval_theorem4(const StarNetwork& net, int settings,
                               const EvalOptions& opts = {});

/// Evaluates any id, enforcing its n/parity restrictions.
InequalityReport evaluate(InequalityId id, const StarNetwork& net, const EvalOptions& opts = {});

}  // namespace netsteer
