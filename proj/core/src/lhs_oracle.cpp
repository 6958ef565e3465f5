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

#include "netsteer/lhs_oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <map>
#include <random>

#include "netsteer/errors.hpp"
#include "netsteer/measurements.hpp"
#include "netsteer/parallel.hpp"

namespace netsteer {

namespace {

constexpr int kTriesPerBlock = 4;
constexpr int kStallSweeps = 10;
constexpr double kInitialStep = 0.3;
constexpr double kMinStep = 1e-12;
// Success-rule step adaptation: equilibrium near a 1/5 acceptance rate.
constexpr double kGrow = 1.5;
constexpr double kShrink = 0.9;
constexpr std::size_t kMaxOracleParties = 5;
constexpr std::size_t kExhaustiveSignBits = 16;

// One correlator channel: the value on a product of edge states is
// prod_k (a_k0 + a_k . r_k).
struct Channel {
  std::vector<int> settings;                   // GHZ-basis channels
  std::vector<std::array<double, 4>> affine;   // per party (a0, a1, a2, a3)
};

struct Objective {
  std::size_t n;
  std::vector<Channel> channels;
  std::vector<std::vector<std::size_t>> groups;
  double exponent;
  std::size_t options;
  std::vector<std::vector<double>> sign;  // sign[option][channel]

  double combine(const std::vector<double>& e) const {
    double best = 0.0;
    for (const auto& group : groups) {
      double total = 0.0;
      for (std::size_t m : group) total += std::pow(std::abs(e[m]), exponent);
      best = std::max(best, total);
    }
    return best;
  }
};

Objective build_objective(InequalityId id, std::size_t n) {
  Objective obj{n, {}, {}, 0.0, 0, {}};
  if (id == InequalityId::T3_CHSH) {
    for (const auto& v : kChshPatterns) {
      Channel ch;
      ch.affine.assign(n, {0.0, double(v[0]), double(v[1]), double(v[2])});
      obj.channels.push_back(std::move(ch));
    }
    obj.groups = {{0, 1, 2, 3}};
    obj.exponent = 1.0 / static_cast<double>(n);
    obj.options = 16;
    for (std::size_t o = 0; o < obj.options; ++o) {
      std::vector<double> row(4);
      for (std::size_t m = 0; m < 4; ++m) row[m] = (o >> m) & 1U ? -1.0 : 1.0;
      obj.sign.push_back(std::move(row));
    }
    return obj;
  }

  const CorrelatorSum sum = correlator_sum(id, n);
  obj.exponent = sum.exponent;
  std::map<std::string, std::size_t> index;
  std::vector<SettingString> strings;
  for (const auto& group : sum.groups) {
    std::vector<std::size_t> ids;
    for (const auto& s : group) {
      auto [it, inserted] = index.try_emplace(s.str(), strings.size());
      if (inserted) strings.push_back(s);
      ids.push_back(it->second);
    }
    obj.groups.push_back(std::move(ids));
  }
  for (const auto& s : strings) {
    Channel ch;
    ch.settings = s.indices();
    for (int i : s.indices()) {
      std::array<double, 4> a{0.0, 0.0, 0.0, 0.0};
      a[static_cast<std::size_t>(i)] = 1.0;
      ch.affine.push_back(a);
    }
    obj.channels.push_back(std::move(ch));
  }
  obj.options = std::size_t{1} << n;
  for (std::size_t b = 0; b < obj.options; ++b) {
    const Bitstring bits = Bitstring::from_index(b, n);
    std::vector<double> row;
    for (const auto& s : strings) row.push_back(sign_exponent(n, s, bits) % 2 == 0 ? 1.0 : -1.0);
    obj.sign.push_back(std::move(row));
  }
  return obj;
}

double affine_value(const std::array<double, 4>& a, const Vec3& r) {
  return a[0] + a[1] * r[0] + a[2] * r[1] + a[3] * r[2];
}

void clip_to_ball(Vec3& r) {
  const double norm = std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2]);
  if (norm > 1.0)
    for (double& x : r) x /= norm;
}

std::vector<double> softmax(const std::vector<double>& logits) {
  const double top = *std::max_element(logits.begin(), logits.end());
  std::vector<double> w(logits.size());
  double total = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) total += w[i] = std::exp(logits[i] - top);
  for (double& x : w) x /= total;
  return w;
}

std::mt19937_64 restart_stream(std::uint64_t seed, int restart) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(restart)};
  return std::mt19937_64(seq);
}

Vec3 random_unit(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  for (;;) {
    Vec3 r{gauss(rng), gauss(rng), gauss(rng)};
    const double norm = std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2]);
    if (norm > 1e-8) return {r[0] / norm, r[1] / norm, r[2] / norm};
  }
}

// Gaussian hill climbing on one parameter block. Returns the new objective.
double climb_block(std::span<double> params, double& step, double current,
                   const std::function<double()>& eval, const std::function<void()>& project,
                   std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  std::vector<double> saved(params.begin(), params.end());
  for (int t = 0; t < kTriesPerBlock; ++t) {
    for (std::size_t i = 0; i < params.size(); ++i) params[i] = saved[i] + step * gauss(rng);
    project();
    const double value = eval();
    if (value > current) {
      current = value;
      std::copy(params.begin(), params.end(), saved.begin());
      step = std::min(step * kGrow, 1.0);
    } else {
      std::copy(saved.begin(), saved.end(), params.begin());
      step = std::max(step * kShrink, kMinStep);
    }
  }
  return current;
}

template <class Sweep>
double run_sweeps(double start, const OracleOptions& opts, Sweep&& sweep) {
  double current = start;
  int stalled = 0;
  for (int s = 0; s < opts.max_sweeps && stalled < kStallSweeps; ++s) {
    const double next = sweep(current);
    const double gain = next - current;
    stalled = gain <= opts.rel_tol * std::max(std::abs(current), 1e-300) ? stalled + 1 : 0;
    current = next;
  }
  return current;
}

template <class Model>
std::size_t pick_best(const std::vector<std::pair<double, Model>>& runs) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < runs.size(); ++i)
    if (runs[i].first > runs[best].first) best = i;
  return best;
}

// ---- NLHS ----

struct NlhsEvaluator {
  const Objective& obj;

  double operator()(const LhsModel& model) const {
    const std::size_t n = obj.n;
    const auto h = static_cast<std::size_t>(model.hidden_values);
    std::size_t tuples = 1;
    for (std::size_t k = 0; k < n; ++k) tuples *= h;
    std::vector<double> e(obj.channels.size(), 0.0);
    std::vector<std::size_t> lambda(n, 0);
    for (std::size_t t = 0; t < tuples; ++t) {
      std::size_t rest = t;
      double weight = 1.0;
      for (std::size_t k = n; k-- > 0;) {
        lambda[k] = rest % h;
        rest /= h;
        weight *= model.weights[k][lambda[k]];
      }
      const auto& sign = obj.sign[model.response[t]];
      for (std::size_t m = 0; m < obj.channels.size(); ++m) {
        double value = weight * sign[m];
        for (std::size_t k = 0; k < n && value != 0.0; ++k)
          value *= affine_value(obj.channels[m].affine[k], model.bloch[k][lambda[k]]);
        e[m] += value;
      }
    }
    return obj.combine(e);
  }
};

void check_nlhs_args(InequalityId id, std::size_t n, const OracleOptions& opts) {
  require_applicable(id, n);
  if (n > kMaxOracleParties)
    throw SizeLimitError("oracle supports n <= 5, got n = " + std::to_string(n));
  if (opts.restarts < 1) throw RangeError("restarts must be >= 1");
  if (opts.hidden_values < 1) throw RangeError("hidden_values must be >= 1");
  if (opts.max_sweeps < 1) throw RangeError("max_sweeps must be >= 1");
}

std::pair<double, LhsModel> nlhs_restart(const Objective& obj, const OracleOptions& opts,
                                         int restart) {
  auto rng = restart_stream(opts.seed, restart);
  const std::size_t n = obj.n;
  const auto h = static_cast<std::size_t>(opts.hidden_values);
  LhsModel model = maximally_mixed_model(n, opts.hidden_values);
  std::vector<std::vector<double>> logits(n, std::vector<double>(h, 0.0));
  std::normal_distribution<double> gauss;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < h; ++l) {
      model.bloch[k][l] = random_unit(rng);
      if (h > 1) logits[k][l] = gauss(rng);
    }
  for (std::size_t k = 0; k < n; ++k) model.weights[k] = softmax(logits[k]);
  std::uniform_int_distribution<std::size_t> pick(0, obj.options - 1);
  for (auto& r : model.response) r = pick(rng);

  NlhsEvaluator eval{obj};
  std::vector<std::vector<double>> bloch_step(n, std::vector<double>(h, kInitialStep));
  std::vector<double> weight_step(n, kInitialStep);

  auto sweep = [&](double current) {
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t l = 0; l < h; ++l) {
        Vec3& r = model.bloch[k][l];
        current = climb_block(
            r, bloch_step[k][l], current, [&] { return eval(model); }, [&] { clip_to_ball(r); },
            rng);
      }
    if (h > 1)
      for (std::size_t k = 0; k < n; ++k)
        current = climb_block(
            logits[k], weight_step[k], current, [&] { return eval(model); },
            [&] { model.weights[k] = softmax(logits[k]); }, rng);
    for (auto& r : model.response) {
      const std::size_t keep = r;
      std::size_t best = keep;
      for (std::size_t o = 0; o < obj.options; ++o) {
        if (o == keep) continue;
        r = o;
        const double value = eval(model);
        if (value > current) {
          current = value;
          best = o;
        }
      }
      r = best;
    }
    return current;
  };
  const double best = run_sweeps(eval(model), opts, sweep);
  return {best, std::move(model)};
}

// ---- BLHS ----

std::array<std::size_t, 2> pair_of(std::size_t t) {
  if (t == 0) return {1, 2};
  if (t == 1) return {0, 2};
  return {0, 1};
}

// Index 4 * a + b holds sigma_a (x) sigma_b.
const std::vector<ComplexMatrix>& pauli_pairs() {
  static const auto table = [] {
    std::vector<ComplexMatrix> out;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) out.push_back(kron(pauli::by_index(a), pauli::by_index(b)));
    return out;
  }();
  return table;
}

// L is lower triangular: 4 real diagonal entries then 6 complex
// off-diagonal entries as (re, im) pairs.
constexpr std::size_t kCholeskyParams = 16;

ComplexMatrix density_from_cholesky(std::span<const double> p) {
  ComplexMatrix l(4);
  std::size_t next = 4;
  for (std::size_t i = 0; i < 4; ++i) {
    l(i, i) = p[i];
    for (std::size_t j = 0; j < i; ++j, next += 2) l(i, j) = Complex(p[next], p[next + 1]);
  }
  ComplexMatrix rho = l * l.adjoint();
  const double tr = rho.trace().real();
  if (tr < 1e-300) return ComplexMatrix::identity(4) * Complex(0.25);
  rho *= 1.0 / tr;
  return rho;
}

struct BlhsEvaluator {
  const Objective& obj;

  double operator()(const BlhsModel& model) const {
    const auto& pp = pauli_pairs();
    std::vector<double> e(obj.channels.size(), 0.0);
    for (std::size_t t = 0; t < 3; ++t) {
      const auto [i, j] = pair_of(t);
      const auto& sign = obj.sign[model.response[t]];
      for (std::size_t m = 0; m < obj.channels.size(); ++m) {
        const auto& s = obj.channels[m].settings;
        const double pair_value =
            trace_of_product(model.pair[t], pp[static_cast<std::size_t>(4 * s[i] + s[j])]).real();
        e[m] += model.q[t] * sign[m] * pair_value *
                affine_value(obj.channels[m].affine[t], model.single[t]);
      }
    }
    return obj.combine(e);
  }
};

std::pair<double, BlhsModel> blhs_restart(const Objective& obj, const OracleOptions& opts,
                                          int restart) {
  auto rng = restart_stream(opts.seed, restart);
  std::normal_distribution<double> gauss;
  std::uniform_int_distribution<std::size_t> pick(0, obj.options - 1);

  BlhsModel model;
  std::vector<double> logits(3);
  std::array<std::vector<double>, 3> chol;
  for (std::size_t t = 0; t < 3; ++t) {
    logits[t] = gauss(rng);
    chol[t].resize(kCholeskyParams);
    for (double& x : chol[t]) x = gauss(rng);
    model.pair[t] = density_from_cholesky(chol[t]);
    model.single[t] = random_unit(rng);
    model.response[t] = pick(rng);
  }
  const auto q = softmax(logits);
  std::copy(q.begin(), q.end(), model.q.begin());

  BlhsEvaluator eval{obj};
  std::array<double, 3> chol_step{kInitialStep, kInitialStep, kInitialStep};
  std::array<double, 3> single_step{kInitialStep, kInitialStep, kInitialStep};
  double q_step = kInitialStep;

  auto sweep = [&](double current) {
    for (std::size_t t = 0; t < 3; ++t) {
      current = climb_block(
          chol[t], chol_step[t], current, [&] { return eval(model); },
          [&] { model.pair[t] = density_from_cholesky(chol[t]); }, rng);
      Vec3& r = model.single[t];
      current = climb_block(
          r, single_step[t], current, [&] { return eval(model); }, [&] { clip_to_ball(r); }, rng);
    }
    current = climb_block(
        logits, q_step, current, [&] { return eval(model); },
        [&] {
          const auto w = softmax(logits);
          std::copy(w.begin(), w.end(), model.q.begin());
        },
        rng);
    for (auto& r : model.response) {
      const std::size_t keep = r;
      std::size_t best = keep;
      for (std::size_t o = 0; o < obj.options; ++o) {
        if (o == keep) continue;
        r = o;
        const double value = eval(model);
        if (value > current) {
          current = value;
          best = o;
        }
      }
      r = best;
    }
    return current;
  };
  const double best = run_sweeps(eval(model), opts, sweep);
  return {best, std::move(model)};
}

void require_blhs_id(InequalityId id) {
  if (id != InequalityId::T4_GEN_2SET && id != InequalityId::T4_GEN_3SET)
    throw ValidationError("BLHS oracle supports T4_GEN_2SET and T4_GEN_3SET, got " +
                          to_string(id));
}

template <class Result, class Model>
Result collect(std::vector<std::pair<double, Model>> runs) {
  Result result;
  const std::size_t best = pick_best(runs);
  result.best = runs[best].first;
  result.best_restart = static_cast<int>(best);
  for (const auto& r : runs) result.per_restart.push_back(r.first);
  result.model = std::move(runs[best].second);
  return result;
}

// ---- Lemmas ----

std::vector<std::vector<int>> lemma_terms(std::size_t n, Lemma which) {
  std::vector<std::vector<int>> terms;
  const std::size_t count = std::size_t{1} << n;
  for (std::size_t mask = 0; mask < count; ++mask) {
    std::vector<int> s(n);
    for (std::size_t k = 0; k < n; ++k) s[k] = (mask >> (n - 1 - k)) & 1U ? 2 : 1;
    terms.push_back(std::move(s));
  }
  if (which == Lemma::lemma2)
    for (std::size_t mask = 0; mask < count; ++mask) {
      if (std::popcount(mask) % 2 == 0) continue;
      std::vector<int> s(n);
      for (std::size_t k = 0; k < n; ++k) s[k] = (mask >> (n - 1 - k)) & 1U ? 3 : 0;
      terms.push_back(std::move(s));
    }
  return terms;
}

double exhaustive_sign_norm(const std::vector<ComplexMatrix>& ops) {
  // Gray-code walk over the signs of ops[1..]; ops[0] keeps sign +.
  const std::size_t free_bits = ops.size() - 1;
  ComplexMatrix t = ops[0];
  for (std::size_t j = 1; j < ops.size(); ++j) t += ops[j];
  double best = operator_norm(t);
  std::vector<int> sign(ops.size(), 1);
  const std::size_t patterns = std::size_t{1} << free_bits;
  for (std::size_t g = 1; g < patterns; ++g) {
    const std::size_t j = static_cast<std::size_t>(std::countr_zero(g)) + 1;
    t += Complex(-2.0 * sign[j]) * ops[j];
    sign[j] = -sign[j];
    best = std::max(best, operator_norm(t));
  }
  return best;
}

double ascent_sign_norm(const std::vector<ComplexMatrix>& ops, std::uint64_t seed) {
  const std::size_t d = ops.front().dim();
  double best = 0.0;
  for (int restart = 0; restart < 64; ++restart) {
    auto rng = restart_stream(seed, restart);
    std::normal_distribution<double> gauss;
    std::vector<Complex> psi(d);
    for (auto& x : psi) x = Complex(gauss(rng), gauss(rng));
    std::vector<int> sign(ops.size(), 0);
    double value = 0.0;
    for (int iter = 0; iter < 1000; ++iter) {
      bool changed = false;
      ComplexMatrix t(d);
      for (std::size_t j = 0; j < ops.size(); ++j) {
        Complex ev = 0.0;
        for (std::size_t r = 0; r < d; ++r)
          for (std::size_t c = 0; c < d; ++c) ev += std::conj(psi[r]) * ops[j](r, c) * psi[c];
        const int s = ev.real() >= 0.0 ? 1 : -1;
        changed = changed || s != sign[j];
        sign[j] = s;
        t += Complex(s) * ops[j];
      }
      if (!changed) break;
      auto top = max_eigenpair(t);
      value = top.value;
      psi = std::move(top.vector);
    }
    best = std::max(best, value);
  }
  return best;
}

}  // namespace

LhsModel maximally_mixed_model(std::size_t n, int hidden_values) {
  if (hidden_values < 1) throw RangeError("hidden_values must be >= 1");
  const auto h = static_cast<std::size_t>(hidden_values);
  LhsModel model;
  model.n = n;
  model.hidden_values = hidden_values;
  model.weights.assign(n, std::vector<double>(h, 1.0 / static_cast<double>(h)));
  model.bloch.assign(n, std::vector<Vec3>(h, Vec3{0.0, 0.0, 0.0}));
  std::size_t tuples = 1;
  for (std::size_t k = 0; k < n; ++k) tuples *= h;
  model.response.assign(tuples, 0);
  return model;
}

double nlhs_value(InequalityId id, const LhsModel& model) {
  require_applicable(id, model.n);
  const Objective obj = build_objective(id, model.n);
  for (std::size_t r : model.response)
    if (r >= obj.options) throw RangeError("response index out of range");
  return NlhsEvaluator{obj}(model);
}

NlhsResult maximize_nlhs(InequalityId id, std::size_t n, const OracleOptions& opts) {
  check_nlhs_args(id, n, opts);
  const Objective obj = build_objective(id, n);
  auto runs = parallel_map<std::pair<double, LhsModel>>(
      static_cast<std::size_t>(opts.restarts), opts.jobs,
      [&](std::size_t r) { return nlhs_restart(obj, opts, static_cast<int>(r)); });
  return collect<NlhsResult>(std::move(runs));
}

double blhs_value(InequalityId id, const BlhsModel& model) {
  require_blhs_id(id);
  const Objective obj = build_objective(id, 3);
  return BlhsEvaluator{obj}(model);
}

BlhsResult maximize_blhs_n3(InequalityId id, const OracleOptions& opts) {
  require_blhs_id(id);
  if (opts.restarts < 1) throw RangeError("restarts must be >= 1");
  const Objective obj = build_objective(id, 3);
  auto runs = parallel_map<std::pair<double, BlhsModel>>(
      static_cast<std::size_t>(opts.restarts), opts.jobs,
      [&](std::size_t r) { return blhs_restart(obj, opts, static_cast<int>(r)); });
  return collect<BlhsResult>(std::move(runs));
}

std::string to_string(Lemma lemma) { return lemma == Lemma::lemma1 ? "lemma1" : "lemma2"; }

Lemma parse_lemma(std::string_view text) {
  if (text == "lemma1") return Lemma::lemma1;
  if (text == "lemma2") return Lemma::lemma2;
  throw ValidationError("lemma must be \"lemma1\" or \"lemma2\", got \"" + std::string(text) + "\"");
}

LemmaResult lemma_norm_check(std::size_t n, Lemma which, std::uint64_t seed) {
  if (n < 1 || n > 4) throw SizeLimitError("lemma check supports 1 <= n <= 4, got " + std::to_string(n));
  std::vector<ComplexMatrix> ops;
  for (const auto& s : lemma_terms(n, which)) ops.push_back(pauli_string(s));

  LemmaResult result{n, which, 0.0, 0.0, 0.0, 0.0, ""};
  if (ops.size() - 1 <= kExhaustiveSignBits) {
    result.operator_norm = exhaustive_sign_norm(ops);
    result.method = "exhaustive";
  } else {
    result.operator_norm = ascent_sign_norm(ops, seed);
    result.method = "ascent";
  }
  const double half = std::ldexp(1.0, static_cast<int>(n) - 1);  // 2^(n-1)
  if (which == Lemma::lemma2) {
    result.unit_terms = half - 1.0;
    result.bound = half * std::sqrt(3.0) + half - 1.0;
  } else {
    result.bound = half * std::sqrt(2.0);
  }
  result.total = result.operator_norm + result.unit_terms;
  return result;
}

}  // namespace netsteer
