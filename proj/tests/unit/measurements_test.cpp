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

#include <cmath>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "netsteer/errors.hpp"
#include "netsteer/measurements.hpp"
#include "test_util.hpp"

namespace netsteer {
namespace {

using testing::matrices_near;

std::vector<std::string> strings(const std::vector<SettingString>& list) {
  std::vector<std::string> out;
  for (const auto& s : list) out.push_back(s.str());
  return out;
}

// Expected y operator written directly as a signed Pauli product, without
// going through the measurement module.
ComplexMatrix expected_y(const SettingString& s) {
  std::vector<ComplexMatrix> factors;
  int twos = 0;
  for (int i : s.indices()) {
    switch (i) {
      case 0: factors.push_back(pauli::identity()); break;
      case 1: factors.push_back(pauli::x()); break;
      case 2: factors.push_back(pauli::y()); ++twos; break;
      default: factors.push_back(pauli::z()); break;
    }
  }
  const double sign = (twos / 2) % 2 == 0 ? 1.0 : -1.0;
  return Complex(sign) * kron_all(factors);
}

std::vector<Complex> ghz_ket(std::size_t n, std::size_t t, double sign) {
  const std::size_t dim = std::size_t{1} << n;
  std::vector<Complex> v(dim, 0.0);
  v[t] = 1.0 / std::sqrt(2.0);
  v[t ^ (dim - 1)] = sign / std::sqrt(2.0);
  return v;
}

TEST(BitstringTest, BigEndianIndex) {
  EXPECT_EQ(Bitstring::from_index(6, 3).str(), "110");
  EXPECT_EQ(Bitstring::parse("011").to_index(), 3u);
  EXPECT_EQ(Bitstring::parse("011").complement().str(), "100");
  EXPECT_THROW(Bitstring::parse("012"), ValidationError);
}

TEST(SettingStringTest, Classification) {
  EXPECT_EQ(SettingString::parse("122").setting_class(), SettingClass::C);
  EXPECT_EQ(SettingString::parse("330").setting_class(), SettingClass::Cprime);
  EXPECT_THROW(SettingString::parse("12"), InvalidSettingError);
  EXPECT_THROW(SettingString::parse("300"), InvalidSettingError);
  EXPECT_THROW(SettingString::parse("000"), InvalidSettingError);
  EXPECT_THROW(SettingString::parse("13"), InvalidSettingError);
  EXPECT_THROW(SettingString::diagonal(2, 3), InvalidSettingError);
}

TEST(IndexSetsTest, SmallCases) {
  const auto two = index_sets(2);
  EXPECT_EQ(strings(two.c), (std::vector<std::string>{"11", "22"}));
  EXPECT_EQ(strings(two.c_prime), (std::vector<std::string>{"33"}));
  const auto three = index_sets(3);
  EXPECT_EQ(strings(three.c), (std::vector<std::string>{"111", "122", "212", "221"}));
  EXPECT_EQ(strings(three.c_prime), (std::vector<std::string>{"330", "303", "033"}));
  const auto four = index_sets(4);
  EXPECT_EQ(four.c.size(), 8u);
  EXPECT_EQ(four.c_prime.size(), 7u);
}

TEST(IndexSetsTest, SizesFollowParityCounts) {
  for (std::size_t n = 2; n <= 10; ++n) {
    const auto sets = index_sets(n);
    EXPECT_EQ(sets.c.size(), std::size_t{1} << (n - 1));
    EXPECT_EQ(sets.c_prime.size(), (std::size_t{1} << (n - 1)) - 1);
  }
}

TEST(MubTripleTest, PauliTripleIsUnbiased) {
  const auto mub = MubTriple::pauli();
  for (int i = 1; i <= 3; ++i) {
    EXPECT_TRUE(matrices_near(mub.observable(i) * mub.observable(i), ComplexMatrix::identity(2),
                              1e-12));
    for (int j = i + 1; j <= 3; ++j)
      EXPECT_NEAR(std::abs(trace_of_product(mub.observable(i), mub.observable(j))), 0.0, 1e-12);
  }
  EXPECT_TRUE(mub.is_pauli());
  EXPECT_TRUE(matrices_near(mub.projector(0, 0), ComplexMatrix::identity(2), 0.0));
  EXPECT_TRUE(matrices_near(mub.projector(0, 1), ComplexMatrix(2), 0.0));
}

TEST(MubTripleTest, RotatedTripleStaysUnbiased) {
  const double th = 0.4;
  const auto u = ComplexMatrix::from_rows(
      {{std::cos(th), -std::sin(th) * Complex(0, 1)}, {-std::sin(th) * Complex(0, 1), std::cos(th)}});
  const auto mub = MubTriple::rotated(u);
  EXPECT_FALSE(mub.is_pauli());
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j)
      EXPECT_NEAR(std::abs(trace_of_product(mub.observable(i), mub.observable(j))), 0.0, 1e-12);
  EXPECT_THROW(MubTriple::rotated(Complex(2.0) * ComplexMatrix::identity(2)), RangeError);
}

TEST(GhzProjectorsTest, TwoQubitLabels) {
  const auto g = ghz_projectors(2);
  EXPECT_TRUE(matrices_near(g.projector(Bitstring::parse("00")), ComplexMatrix::outer(ghz_ket(2, 0, 1)), 1e-15));
  EXPECT_TRUE(matrices_near(g.projector(Bitstring::parse("11")), ComplexMatrix::outer(ghz_ket(2, 0, -1)), 1e-15));
  EXPECT_TRUE(matrices_near(g.projector(Bitstring::parse("01")), ComplexMatrix::outer(ghz_ket(2, 1, 1)), 1e-15));
  EXPECT_TRUE(matrices_near(g.projector(Bitstring::parse("10")), ComplexMatrix::outer(ghz_ket(2, 1, -1)), 1e-15));
}

TEST(GhzProjectorsTest, SingleQubitIsXBasis) {
  const auto g = ghz_projectors(1);
  const auto half = Complex(0.5);
  EXPECT_TRUE(matrices_near(g.projector(0), half * (pauli::identity() + pauli::x()), 1e-15));
  EXPECT_TRUE(matrices_near(g.projector(1), half * (pauli::identity() - pauli::x()), 1e-15));
}

TEST(GhzProjectorsTest, CompleteOrthogonalIdempotentUpToSix) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto g = ghz_projectors(n);
    const std::size_t dim = std::size_t{1} << n;
    ComplexMatrix sum(dim);
    for (const auto& p : g.projectors()) sum += p;
    EXPECT_TRUE(matrices_near(sum, ComplexMatrix::identity(dim), 1e-12)) << "n = " << n;
    for (std::size_t a = 0; a < dim; ++a) {
      EXPECT_TRUE(matrices_near(g.projector(a) * g.projector(a), g.projector(a), 1e-12));
      // For PSD projectors Tr(P_a P_b) = 0 is equivalent to P_a P_b = 0.
      for (std::size_t b = a + 1; b < dim; ++b)
        ASSERT_NEAR(std::abs(trace_of_product(g.projector(a), g.projector(b))), 0.0, 1e-12);
    }
  }
  EXPECT_THROW(ghz_projectors(7), SizeLimitError);
}

TEST(YOperatorTest, NamedTwoQubitExamples) {
  const auto g = ghz_projectors(2);
  auto at = [&](const char* b) { return g.projector(Bitstring::parse(b)); };
  EXPECT_TRUE(matrices_near(y_operator(2, SettingString::parse("33")),
                            at("00") + at("11") - at("01") - at("10"), 1e-12));
  EXPECT_TRUE(matrices_near(y_operator(2, SettingString::parse("33")),
                            kron(pauli::z(), pauli::z()), 1e-12));
  EXPECT_TRUE(matrices_near(y_operator(2, SettingString::parse("11")),
                            at("00") - at("11") + at("01") - at("10"), 1e-12));
  EXPECT_TRUE(matrices_near(y_operator(2, SettingString::parse("11")),
                            kron(pauli::x(), pauli::x()), 1e-12));
  // The "y_1" combination G00 - G11 - (G01 - G10) is -sigma_y (x) sigma_y.
  EXPECT_TRUE(matrices_near(y_operator(2, SettingString::parse("22")),
                            at("00") - at("11") - at("01") + at("10"), 1e-12));
  EXPECT_TRUE(matrices_near(y_operator(3, SettingString::parse("111")),
                            kron_all(std::vector<ComplexMatrix>(3, pauli::x())), 1e-12));
}

TEST(YOperatorTest, PauliStringIdentityAndUnitSpectrum) {
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto g = ghz_projectors(n);
    const auto sets = index_sets(n);
    std::vector<SettingString> all = sets.c;
    all.insert(all.end(), sets.c_prime.begin(), sets.c_prime.end());
    const std::size_t dim = std::size_t{1} << n;
    for (const auto& s : all) {
      const auto y = y_operator(g, s);
      EXPECT_TRUE(matrices_near(y, expected_y(s), 1e-12)) << s.str();
      const auto form = y_pauli_form(s);
      EXPECT_TRUE(matrices_near(y, Complex(form.sign) * pauli_string(form.paulis), 1e-12));
      EXPECT_TRUE(matrices_near(y * y, ComplexMatrix::identity(dim), 1e-12));
      for (double ev : eigenvalues(y)) EXPECT_NEAR(std::abs(ev), 1.0, 1e-12);
    }
  }
}

TEST(SignRuleTest, Examples) {
  EXPECT_EQ(sign_exponent(2, SettingString::parse("33"), Bitstring::parse("00")), 0);
  EXPECT_EQ(sign_exponent(3, SettingString::parse("330"), Bitstring::parse("011")), 1);
}

TEST(SignRuleTest, ReconstructsYOperators) {
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto g = ghz_projectors(n);
    const auto sets = index_sets(n);
    std::vector<SettingString> all = sets.c;
    all.insert(all.end(), sets.c_prime.begin(), sets.c_prime.end());
    const std::size_t dim = std::size_t{1} << n;
    for (const auto& s : all) {
      ComplexMatrix y(dim);
      for (std::size_t b = 0; b < dim; ++b) {
        const int e = sign_exponent(n, s, Bitstring::from_index(b, n));
        y += Complex(e == 0 ? 1.0 : -1.0) * g.projector(b);
      }
      EXPECT_TRUE(matrices_near(y, expected_y(s), 1e-12)) << s.str();
    }
  }
}

}  // namespace
}  // namespace netsteer
