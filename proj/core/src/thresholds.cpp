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

#include "netsteer/thresholds.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <utility>

#include <boost/math/special_functions/binomial.hpp>
#include <boost/math/tools/roots.hpp>

#include "netsteer/errors.hpp"
#include "netsteer/parallel.hpp"

namespace netsteer {

namespace {

constexpr double kRootTolerance = 1e-14;
constexpr double kMonotoneSlack = 1e-12;

double binomial(std::size_t n, std::size_t k) {
  return boost::math::binomial_coefficient<double>(static_cast<unsigned>(n),
                                                   static_cast<unsigned>(k));
}

double bracketed_root(const std::function<double(double)>& f) {
  const double f0 = f(0.0);
  if (f0 >= 0.0) return 0.0;
  std::uintmax_t max_iter = 200;
  auto [lo, hi] = boost::math::tools::toms748_solve(
      f, 0.0, 1.0, f0, f(1.0), [](double a, double b) { return std::abs(b - a) <= kRootTolerance; },
      max_iter);
  return 0.5 * (lo + hi);
}

std::string format_p(double p) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", p);
  return buf;
}

}  // namespace

NetworkFamily werner_family(std::size_t n) {
  return [n](double p) { return StarNetwork::uniform(make_werner(p), n); };
}

ThresholdResult bisect_threshold(const NetworkFamily& family, const std::string& family_name,
                                 InequalityId id, const ThresholdOptions& opts) {
  const std::size_t n = family(0.0).size();
  require_applicable(id, n);
  const double bound = inequality_bound(id, n);
  auto lhs = [&](double p) {
    const StarNetwork net = family(p);
    if (net.size() != n) throw ValidationError("family changed n between parameter values");
    return evaluate(id, net, opts.eval).lhs;
  };

  ThresholdResult result{id,  family_name, n, settings_count(id), form_of(id), 0.0, 0.0, 0,
                         bound, {}};

  if (opts.prescan_points >= 2) {
    double prev = lhs(0.0);
    for (int k = 1; k < opts.prescan_points; ++k) {
      const double p = static_cast<double>(k) / (opts.prescan_points - 1);
      const double cur = lhs(p);
      if (cur < prev - kMonotoneSlack)
        result.warnings.push_back("lhs decreases near p = " + format_p(p) + " (" +
                                  std::to_string(prev) + " -> " + std::to_string(cur) + ")");
      prev = cur;
    }
  }

  double lo = 0.0;
  double hi = 1.0;
  const double f_lo = lhs(lo) - bound;
  const double f_hi = lhs(hi) - bound;
  if (f_lo > 0.0 || f_hi <= 0.0)
    throw NoCrossingError(to_string(id) + " on " + family_name + ": lhs(0) - bound = " +
                          std::to_string(f_lo) + ", lhs(1) - bound = " + std::to_string(f_hi) +
                          "; need lhs(0) <= bound < lhs(1)");

  double best_p = hi;
  double best_residual = std::abs(f_hi);
  for (int it = 1; it <= opts.max_iterations; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = lhs(mid) - bound;
    result.iterations = it;
    if (std::abs(f_mid) < best_residual) {
      best_residual = std::abs(f_mid);
      best_p = mid;
    }
    if (std::abs(f_mid) <= opts.residual_tolerance || mid == lo || mid == hi) break;
    (f_mid > 0.0 ? hi : lo) = mid;
  }
  result.p_star = best_p;
  result.residual = best_residual;
  if (best_residual > opts.residual_tolerance)
    throw NoCrossingError(to_string(id) + " on " + family_name + ": residual " +
                          std::to_string(best_residual) + " after " +
                          std::to_string(result.iterations) + " iterations");
  return result;
}

ThresholdResult werner_threshold(std::size_t n, InequalityId id, const ThresholdOptions& opts) {
  return bisect_threshold(werner_family(n), "werner:" + to_string(id), id, opts);
}

double odd_n_lhs(std::size_t n, double p) {
  const double dn = static_cast<double>(n);
  double total = std::ldexp(p, static_cast<int>(n) - 1);
  for (std::size_t k = 2; k < n; k += 2)
    total += binomial(n, k) * std::pow(p, static_cast<double>(k) / dn);
  return total;
}

double genuine_lhs(std::size_t n, double p) {
  double total = std::ldexp(std::pow(p, static_cast<double>(n) / 2.0), static_cast<int>(n) - 1);
  for (std::size_t k = 2; k <= n; k += 2)
    total += binomial(n, k) * std::pow(p, static_cast<double>(k) / 2.0);
  return total;
}

double odd_n_rhs(std::size_t n) {
  const double quarter = std::ldexp(1.0, static_cast<int>(n) - 2);
  return quarter * std::sqrt(3.0) + quarter - 1.0;
}

double solve_odd_n_equation(std::size_t n) { return solve_odd_n_equation(n, odd_n_rhs(n)); }

double solve_odd_n_equation(std::size_t n, double rhs) {
  if (n < 3 || n % 2 == 0) throw ParityError("odd-n equation needs odd n >= 3, got " + std::to_string(n));
  return bracketed_root([n, rhs](double p) { return odd_n_lhs(n, p) - rhs; });
}

double solve_genuine_equation(std::size_t n, int settings) {
  if (n < 3) throw WrongNError("genuine equation needs n >= 3, got " + std::to_string(n));
  if (settings == 2) return std::pow(2.0, -1.0 / static_cast<double>(n));
  if (settings != 3)
    throw ValidationError("settings count must be 2 or 3, got " + std::to_string(settings));
  const double rhs = odd_n_rhs(n);
  return bracketed_root([n, rhs](double p) { return genuine_lhs(n, p) - rhs; });
}

std::string to_string(SourceTag tag) {
  return tag == SourceTag::computed ? "computed" : "paper-cited";
}

SourceTag parse_source_tag(std::string_view text) {
  if (text == "computed") return SourceTag::computed;
  if (text == "paper-cited") return SourceTag::paper_cited;
  throw ValidationError("unknown source tag \"" + std::string(text) + "\"");
}

ThresholdRow to_row(const ThresholdResult& result) {
  return {result.family, result.n,     result.settings,   result.form,
          result.p_star, result.bound, SourceTag::computed};
}

std::vector<ThresholdRow> threshold_table(bool with_cited, unsigned jobs,
                                          const ThresholdOptions& opts) {
  const std::vector<std::pair<std::size_t, InequalityId>> cases{
      {2, InequalityId::T1_LINE},      {2, InequalityId::T2B_EVEN_SQ},
      {2, InequalityId::T2A_EVEN_SQ},  {4, InequalityId::T2A_EVEN_SQ},
      {3, InequalityId::T2B_ODD_ROOT}, {2, InequalityId::T3_CHSH},
      {3, InequalityId::T4_GEN_2SET},  {3, InequalityId::T4_GEN_3SET},
      {4, InequalityId::T4_GEN_3SET},
  };
  auto rows = parallel_map<ThresholdRow>(cases.size(), jobs, [&](std::size_t i) {
    return to_row(werner_threshold(cases[i].first, cases[i].second, opts));
  });
  if (with_cited) {
    rows.push_back({"n-locality", 3, 3, std::nullopt, cited::kNLocalityThreeSettings,
                    std::nullopt, SourceTag::paper_cited});
    rows.push_back({"n-locality", 3, 4, std::nullopt, cited::kNLocalityFourSettings,
                    std::nullopt, SourceTag::paper_cited});
    rows.push_back({"genuine-entanglement", 3, 3, std::nullopt, cited::kGenuineEntanglementN3,
                    std::nullopt, SourceTag::paper_cited});
  }
  return rows;
}

}  // namespace netsteer
