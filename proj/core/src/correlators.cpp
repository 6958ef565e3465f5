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

#include "netsteer/correlators.hpp"

#include <cmath>
#include <sstream>

#include "netsteer/errors.hpp"

namespace netsteer {

namespace {

void require_dense_size(std::size_t n, const char* who) {
  if (n > kMaxDensePairs)
    throw SizeLimitError(std::string(who) + ": dense path supports at most " +
                         std::to_string(kMaxDensePairs) + " sources, got " + std::to_string(n));
}

}  // namespace

Assemblage::Assemblage(std::size_t n, std::vector<ComplexMatrix> elements)
    : n_(n), elements_(std::move(elements)) {
  if (elements_.size() != (std::size_t{1} << n))
    throw DimensionError("assemblage needs 2^n elements");
}

const ComplexMatrix& Assemblage::element(const Bitstring& b) const {
  if (b.size() != n_) throw DimensionError("assemblage outcome has the wrong length");
  return elements_[b.to_index()];
}

double Assemblage::total_trace() const {
  double total = 0.0;
  for (const auto& e : elements_) total += e.trace().real();
  return total;
}

Assemblage assemblage(const StarNetwork& net, const FixedMeasurement& meas) {
  const std::size_t n = net.size();
  if (meas.n() != n)
    throw DimensionError("assemblage: measurement acts on " + std::to_string(meas.n()) +
                         " qubits but the network has " + std::to_string(n) + " sources");
  require_dense_size(n, "assemblage");
  const ComplexMatrix rho = assemble_global(net);
  const std::size_t d = std::size_t{1} << n;  // dimension of A and of B

  std::vector<ComplexMatrix> elements;
  elements.reserve(meas.outcome_count());
  for (const auto& g : meas.projectors()) {
    // sigma(a, a') = sum_{beta, beta'} G(beta, beta') rho((a, beta'), (a', beta))
    struct Entry {
      std::size_t row, col;
      Complex value;
    };
    std::vector<Entry> nonzero;
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c)
        if (std::abs(g(r, c)) > 0.0) nonzero.push_back({r, c, g(r, c)});

    ComplexMatrix sigma(d);
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t a2 = 0; a2 < d; ++a2) {
        Complex sum = 0.0;
        for (const auto& e : nonzero) sum += e.value * rho(a * d + e.col, a2 * d + e.row);
        sigma(a, a2) = sum;
      }
    elements.push_back(std::move(sigma));
  }
  return Assemblage(n, std::move(elements));
}

double joint_probability(const Assemblage& sigma, std::span<const ComplexMatrix> edge_projectors,
                         const Bitstring& b) {
  if (edge_projectors.size() != sigma.n())
    throw DimensionError("joint_probability: need one projector per edge party");
  for (std::size_t k = 0; k < edge_projectors.size(); ++k) {
    const auto& p = edge_projectors[k];
    if (p.dim() != 2) throw DimensionError("edge projectors must be 2x2");
    if ((p * p).max_abs_diff(p) > kStateTolerance)
      throw ProjectorError("edge operator " + std::to_string(k) + " is not a projector");
  }
  return expectation(sigma.element(b), kron_all(edge_projectors));
}

double joint_probability(const StarNetwork& net, std::span<const ComplexMatrix> edge_projectors,
                         const Bitstring& b, const FixedMeasurement& meas) {
  return joint_probability(assemblage(net, meas), edge_projectors, b);
}

double expectation(const ComplexMatrix& rho, const ComplexMatrix& observable) {
  const Complex value = trace_of_product(rho, observable);
  if (std::abs(value.imag()) > kImaginaryResidue) {
    std::ostringstream msg;
    msg << "expectation value has imaginary part " << value.imag()
        << "; observable or state is not Hermitian";
    throw InternalError(msg.str());
  }
  return value.real();
}

ComplexMatrix edge_observable(const std::vector<int>& settings, const MubTriple& mub) {
  std::vector<ComplexMatrix> factors;
  factors.reserve(settings.size());
  for (int i : settings) factors.push_back(mub.observable(i));
  return kron_all(factors);
}

double correlator_dense(const StarNetwork& net, const SettingString& s, const MubTriple& mub) {
  return CorrelatorEngine(net, mub, CorrelatorPath::dense).correlator(s);
}

double correlator_fast(std::span<const TwoQubitSource> sources, const SettingString& s) {
  if (sources.size() != s.size())
    throw InvalidSettingError("setting string " + s.str() + " does not match " +
                              std::to_string(sources.size()) + " sources");
  double value = y_pauli_form(s).sign;
  for (std::size_t k = 0; k < sources.size(); ++k) {
    const int i = s[k];
    if (i == 0) continue;  // c_0 = 1
    value *= sources[k].diagonal_correlations()[static_cast<std::size_t>(i - 1)];
  }
  return value;
}

CorrelatorEngine::CorrelatorEngine(const StarNetwork& net, MubTriple mub, CorrelatorPath path)
    : net_(net), mub_(std::move(mub)) {
  const bool fast_ok = net_.all_structured() && mub_.is_pauli();
  switch (path) {
    case CorrelatorPath::automatic:
      fast_ = fast_ok;
      break;
    case CorrelatorPath::fast:
      if (!net_.all_structured())
        throw UnstructuredSourceError("fast correlator path needs Werner or Bell-diagonal sources");
      if (!mub_.is_pauli())
        throw UnstructuredSourceError("fast correlator path needs the Pauli MUB triple");
      fast_ = true;
      break;
    case CorrelatorPath::dense:
      fast_ = false;
      break;
  }
  if (!fast_) require_dense_size(net_.size(), "correlator");
}

const ComplexMatrix& CorrelatorEngine::global() {
  if (!global_) global_ = assemble_global(net_);
  return *global_;
}

double CorrelatorEngine::correlator(const SettingString& s) {
  if (s.size() != net_.size())
    throw InvalidSettingError("setting string " + s.str() + " does not match " +
                              std::to_string(net_.size()) + " sources");
  if (fast_) return correlator_fast(net_.sources(), s);
  if (!ghz_) ghz_ = ghz_projectors(net_.size());
  return product_expectation(edge_observable(s.indices(), mub_), y_operator(*ghz_, s));
}

double CorrelatorEngine::product_expectation(const ComplexMatrix& edge,
                                             const ComplexMatrix& central) {
  const std::size_t d = std::size_t{1} << net_.size();
  if (edge.dim() != d || central.dim() != d)
    throw DimensionError("product_expectation: operators must act on 2^n dimensions");
  require_dense_size(net_.size(), "product_expectation");
  return expectation(global(), kron(edge, central));
}

double correlator(const StarNetwork& net, const SettingString& s, const MubTriple& mub,
                  CorrelatorPath path) {
  return CorrelatorEngine(net, mub, path).correlator(s);
}

}  // namespace netsteer
