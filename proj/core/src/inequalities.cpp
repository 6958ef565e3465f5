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

#include "netsteer/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "netsteer/errors.hpp"

namespace netsteer {

namespace {

struct IdInfo {
  InequalityId id;
  const char* name;
  int settings;
  std::optional<Form> form;
};

constexpr std::array<IdInfo, 12> kIdTable{{
    {InequalityId::T1_LINE, "T1_LINE", 3, std::nullopt},
    {InequalityId::T2A_ODD_SQ, "T2A_ODD_SQ", 2, Form::squared},
    {InequalityId::T2A_ODD_ROOT, "T2A_ODD_ROOT", 2, Form::root},
    {InequalityId::T2A_EVEN_SQ, "T2A_EVEN_SQ", 2, Form::squared},
    {InequalityId::T2A_EVEN_ROOT, "T2A_EVEN_ROOT", 2, Form::root},
    {InequalityId::T2B_ODD_SQ, "T2B_ODD_SQ", 3, Form::squared},
    {InequalityId::T2B_ODD_ROOT, "T2B_ODD_ROOT", 3, Form::root},
    {InequalityId::T2B_EVEN_SQ, "T2B_EVEN_SQ", 3, Form::squared},
    {InequalityId::T2B_EVEN_ROOT, "T2B_EVEN_ROOT", 3, Form::root},
    {InequalityId::T3_CHSH, "T3_CHSH", 3, std::nullopt},
    {InequalityId::T4_GEN_2SET, "T4_GEN_2SET", 2, std::nullopt},
    {InequalityId::T4_GEN_3SET, "T4_GEN_3SET", 3, std::nullopt},
}};

const IdInfo& info(InequalityId id) {
  return kIdTable[static_cast<std::size_t>(id)];
}

bool is_odd_branch(InequalityId id) {
  switch (id) {
    case InequalityId::T2A_ODD_SQ:
    case InequalityId::T2A_ODD_ROOT:
    case InequalityId::T2B_ODD_SQ:
    case InequalityId::T2B_ODD_ROOT:
      return true;
    default:
      return false;
  }
}

bool is_even_branch(InequalityId id) {
  switch (id) {
    case InequalityId::T2A_EVEN_SQ:
    case InequalityId::T2A_EVEN_ROOT:
    case InequalityId::T2B_EVEN_SQ:
    case InequalityId::T2B_EVEN_ROOT:
      return true;
    default:
      return false;
  }
}

std::vector<SettingString> concat(std::vector<SettingString> a, const std::vector<SettingString>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

double group_value(CorrelatorEngine& engine, const CorrelatorSum& sum) {
  std::map<std::string, double> cache;
  double best = 0.0;
  for (const auto& group : sum.groups) {
    double total = 0.0;
    for (const auto& s : group) {
      auto [it, inserted] = cache.try_emplace(s.str(), 0.0);
      if (inserted) it->second = engine.correlator(s);
      total += std::pow(std::abs(it->second), sum.exponent);
    }
    best = std::max(best, total);
  }
  return best;
}

// v_1 x^1 + v_2 x^2 + v_3 x^3 for one qubit.
ComplexMatrix chsh_combination(const MubTriple& mub, const std::array<int, 3>& v) {
  ComplexMatrix m(2);
  for (int j = 0; j < 3; ++j) m += Complex(v[static_cast<std::size_t>(j)]) * mub.observable(j + 1);
  return m;
}

}  // namespace

std::string to_string(InequalityId id) { return info(id).name; }

std::string to_string(Form form) { return form == Form::squared ? "squared" : "root"; }

InequalityId parse_inequality_id(std::string_view name) {
  for (const auto& entry : kIdTable)
    if (name == entry.name) return entry.id;
  throw ValidationError("unknown inequality id \"" + std::string(name) + "\"");
}

Form parse_form(std::string_view name) {
  if (name == "squared") return Form::squared;
  if (name == "root") return Form::root;
  throw ValidationError("form must be \"squared\" or \"root\", got \"" + std::string(name) + "\"");
}

int settings_count(InequalityId id) { return info(id).settings; }

std::optional<Form> form_of(InequalityId id) { return info(id).form; }

void require_applicable(InequalityId id, std::size_t n) {
  const std::string name = to_string(id);
  if (id == InequalityId::T1_LINE && n != 2)
    throw WrongNError(name + " is defined for the n = 2 line network only, got n = " +
                      std::to_string(n));
  if ((id == InequalityId::T4_GEN_2SET || id == InequalityId::T4_GEN_3SET) && n < 3)
    throw WrongNError(name + " needs n >= 3, got n = " + std::to_string(n));
  if (n < 2) throw WrongNError(name + " needs n >= 2, got n = " + std::to_string(n));
  if (is_odd_branch(id) && n % 2 == 0)
    throw ParityError(name + " is the odd-n branch but n = " + std::to_string(n));
  if (is_even_branch(id) && n % 2 == 1)
    throw ParityError(name + " is the even-n branch but n = " + std::to_string(n));
}

bool is_applicable(InequalityId id, std::size_t n) {
  try {
    require_applicable(id, n);
    return true;
  } catch (const ValidationError&) {
    return false;
  }
}

std::vector<InequalityId> applicable_inequalities(std::size_t n) {
  std::vector<InequalityId> ids;
  for (auto id : kAllInequalities)
    if (is_applicable(id, n)) ids.push_back(id);
  return ids;
}

InequalityId theorem2_id(std::size_t n, int settings, Form form) {
  if (settings != 2 && settings != 3)
    throw ValidationError("settings count must be 2 or 3, got " + std::to_string(settings));
  const bool odd = n % 2 == 1;
  const bool sq = form == Form::squared;
  if (settings == 2) {
    if (odd) return sq ? InequalityId::T2A_ODD_SQ : InequalityId::T2A_ODD_ROOT;
    return sq ? InequalityId::T2A_EVEN_SQ : InequalityId::T2A_EVEN_ROOT;
  }
  if (odd) return sq ? InequalityId::T2B_ODD_SQ : InequalityId::T2B_ODD_ROOT;
  return sq ? InequalityId::T2B_EVEN_SQ : InequalityId::T2B_EVEN_ROOT;
}

InequalityId theorem4_id(int settings) {
  if (settings == 2) return InequalityId::T4_GEN_2SET;
  if (settings == 3) return InequalityId::T4_GEN_3SET;
  throw ValidationError("settings count must be 2 or 3, got " + std::to_string(settings));
}

double inequality_bound(InequalityId id, std::size_t n) {
  const double quarter = std::ldexp(1.0, static_cast<int>(n) - 2);  // 2^(n-2)
  const double sqrt2 = std::sqrt(2.0);
  const double sqrt3 = std::sqrt(3.0);
  switch (id) {
    case InequalityId::T1_LINE: return 1.0;
    case InequalityId::T2A_ODD_SQ: return quarter;
    case InequalityId::T2A_ODD_ROOT: return quarter * sqrt2;
    case InequalityId::T2A_EVEN_SQ: return 1.0;
    case InequalityId::T2A_EVEN_ROOT: return sqrt2;
    case InequalityId::T2B_ODD_SQ: return 2.0 * quarter - 1.0;
    case InequalityId::T2B_ODD_ROOT: return quarter * sqrt3 + quarter - 1.0;
    case InequalityId::T2B_EVEN_SQ: return 1.0;
    case InequalityId::T2B_EVEN_ROOT: return sqrt3;
    case InequalityId::T3_CHSH: return 4.0;
    case InequalityId::T4_GEN_2SET: return quarter * sqrt2;
    case InequalityId::T4_GEN_3SET: return quarter * sqrt3 + quarter - 1.0;
  }
  throw InternalError("unhandled inequality id");
}

CorrelatorSum correlator_sum(InequalityId id, std::size_t n) {
  require_applicable(id, n);
  const double dn = static_cast<double>(n);
  auto diag = [n](int i) { return SettingString::diagonal(i, n); };
  switch (id) {
    case InequalityId::T1_LINE:
      return {{{diag(1), diag(2), diag(3)}}, 1.0};
    case InequalityId::T2A_EVEN_SQ:
    case InequalityId::T2A_EVEN_ROOT:
      return {{{diag(1), diag(2)}, {diag(1), diag(3)}, {diag(2), diag(3)}},
              id == InequalityId::T2A_EVEN_SQ ? 2.0 / dn : 1.0 / dn};
    case InequalityId::T2B_EVEN_SQ:
    case InequalityId::T2B_EVEN_ROOT:
      return {{{diag(1), diag(2), diag(3)}},
              id == InequalityId::T2B_EVEN_SQ ? 2.0 / dn : 1.0 / dn};
    case InequalityId::T2A_ODD_SQ:
    case InequalityId::T2A_ODD_ROOT:
      return {{index_sets(n).c}, id == InequalityId::T2A_ODD_SQ ? 2.0 / dn : 1.0 / dn};
    case InequalityId::T2B_ODD_SQ:
    case InequalityId::T2B_ODD_ROOT: {
      auto sets = index_sets(n);
      return {{concat(std::move(sets.c), sets.c_prime)},
              id == InequalityId::T2B_ODD_SQ ? 2.0 / dn : 1.0 / dn};
    }
    case InequalityId::T4_GEN_2SET:
      return {{index_sets(n).c}, 0.5};
    case InequalityId::T4_GEN_3SET: {
      auto sets = index_sets(n);
      return {{concat(std::move(sets.c), sets.c_prime)}, 0.5};
    }
    case InequalityId::T3_CHSH:
      break;
  }
  throw ValidationError("T3_CHSH is not a sum of fixed-measurement correlators");
}

InequalityReport make_report(InequalityId id, std::size_t n, double lhs) {
  const double bound = inequality_bound(id, n);
  const double margin = lhs - bound;
  return {id, n, settings_count(id), form_of(id), lhs, bound, margin, margin > kViolationMargin};
}

InequalityReport eval_theorem1(const StarNetwork& net, const EvalOptions& opts) {
  return evaluate(InequalityId::T1_LINE, net, opts);
}

InequalityReport eval_theorem2(const StarNetwork& net, int settings, Form form,
                               const EvalOptions& opts) {
  return evaluate(theorem2_id(net.size(), settings, form), net, opts);
}

InequalityReport eval_theorem4(const StarNetwork& net, int settings, const EvalOptions& opts) {
  return evaluate(theorem4_id(settings), net, opts);
}

InequalityReport eval_theorem3(const StarNetwork& net, const EvalOptions& opts) {
  const std::size_t n = net.size();
  require_applicable(InequalityId::T3_CHSH, n);
  CorrelatorEngine engine(net, opts.mub, opts.path);
  const double dn = static_cast<double>(n);

  // The central factor is the entrywise conjugate of the edge combination,
  // divided by its operator norm so that |<B_i>| <= 1.
  double lhs = 0.0;
  for (const auto& v : kChshPatterns) {
    const ComplexMatrix edge_factor = chsh_combination(opts.mub, v);
    ComplexMatrix central_factor = edge_factor.conjugate();
    central_factor *= 1.0 / operator_norm(central_factor);

    double j_value = 1.0;
    if (engine.uses_fast_path()) {
      // Per pair: sum_j v_j^2 s_j c_j with conj(sigma_j) = s_j sigma_j,
      // s = (1, -1, 1) for Paulis.
      const double norm = std::sqrt(3.0);
      for (const auto& source : net.sources()) {
        const Vec3 c = source.diagonal_correlations();
        j_value *= (c[0] - c[1] + c[2]) / norm;
      }
    } else {
      std::vector<ComplexMatrix> edge(n, edge_factor);
      std::vector<ComplexMatrix> central(n, central_factor);
      j_value = engine.product_expectation(kron_all(edge), kron_all(central));
    }
    lhs += std::pow(std::abs(j_value), 1.0 / dn);
  }
  return make_report(InequalityId::T3_CHSH, n, lhs);
}

InequalityReport evaluate(InequalityId id, const StarNetwork& net, const EvalOptions& opts) {
  require_applicable(id, net.size());
  if (id == InequalityId::T3_CHSH) return eval_theorem3(net, opts);
  CorrelatorEngine engine(net, opts.mub, opts.path);
  return make_report(id, net.size(), group_value(engine, correlator_sum(id, net.size())));
}

}  // namespace netsteer
