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
#include <cstdint>
#include <string>
#include <vector>

#include "netsteer/inequalities.hpp"
#include "netsteer/matrix.hpp"
#include "netsteer/states.hpp"

namespace netsteer {

struct OracleOptions {
  int restarts = 64;
  std::uint64_t seed = 42;
  int max_sweeps = 500;
  double rel_tol = 1e-10;
  /// Hidden values per source. 1 is the deterministic single-lambda model.
  int hidden_values = 1;
  unsigned jobs = 1;
};

/// NLHV-LHS model with a deterministic central response per hidden tuple.
struct LhsModel {
  std::size_t n = 0;
  int hidden_values = 1;
  /// weights[k][l] = p(lambda_k = l).
  std::vector<std::vector<double>> weights;
  /// bloch[k][l] is the Bloch vector of edge party k's hidden state for
  /// lambda_k = l; norm <= 1.
  std::vector<std::vector<Vec3>> bloch;
  /// One entry per hidden tuple (lambda_1 most significant). For GHZ-basis
  /// inequalities the entry is the outcome index b; for T3_CHSH it is a
  /// 4-bit mask of +-1 values of B_1..B_4 (bit set means -1).
  std::vector<std::size_t> response;
};

/// All Bloch vectors zero and response 0.
LhsModel maximally_mixed_model(std::size_t n, int hidden_values = 1);

/// The inequality's left-hand side on the model's assemblage.
double nlhs_value(InequalityId id, const LhsModel& model);

struct OracleResult {
  double best;
  int best_restart;
  std::vector<double> per_restart;
};

struct NlhsResult : OracleResult {
  LhsModel model;
};

/// Multi-start ascent over NLHV-LHS models. Requires 2 <= n <= 5 (T1 needs
/// n = 2) and restarts >= 1. Deterministic for a given seed.
NlhsResult maximize_nlhs(InequalityId id, std::size_t n, const OracleOptions& opts = {});

/// Biseparable model for n = 3: per branch t, edge party t holds a qubit
/// state and the other two share a two-qubit state; branches are mixed with
/// weights q.
struct BlhsModel {
  std::array<double, 3> q{};
  std::array<Vec3, 3> single{};
  std::array<ComplexMatrix, 3> pair{ComplexMatrix(4), ComplexMatrix(4), ComplexMatrix(4)};
  std::array<std::size_t, 3> response{};
};

double blhs_value(InequalityId id, const BlhsModel& model);

struct BlhsResult : OracleResult {
  BlhsModel model;
};

/// id must be T4_GEN_2SET or T4_GEN_3SET.
BlhsResult maximize_blhs_n3(InequalityId id, const OracleOptions& opts = {});

enum class Lemma { lemma1, lemma2 };

std::string to_string(Lemma lemma);
Lemma parse_lemma(std::string_view text);

struct LemmaResult {
  std::size_t n;
  Lemma which;
  /// Max over sign patterns of the operator norm of the signed sum.
  double operator_norm;
  /// Number of strings with an even, nonzero count of 3s (lemma2 only),
  /// each contributing at most 1.
  double unit_terms;
  double total;
  double bound;
  std::string method;
};

/// 1 <= n <= 4.
LemmaResult lemma_norm_check(std::size_t n, Lemma which, std::uint64_t seed = 42);

}  // namespace netsteer
