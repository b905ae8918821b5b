/*
 * Copyright 2026 The eoqsim authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "eoqsim/fock.hpp"
#include "eoqsim/rng.hpp"
#include "test_helpers.hpp"

using namespace eoqsim;
using fock::Complex;
using fock::FockState;
using fock::ModeUnitary;
using fock::StateVector;

namespace {

StateVector random_state(RngStream& rng, int modes, int photons) {
  return StateVector(modes, photons,
                     testing::random_amplitudes(
                         rng, static_cast<Eigen::Index>(fock::basis_size(modes, photons))));
}

}  // namespace

TEST_CASE("basis enumeration matches the documented order") {
  const auto b21 = fock::enumerate_basis(2, 1);
  REQUIRE(b21.size() == 2);
  CHECK(b21[0] == FockState({1, 0}));
  CHECK(b21[1] == FockState({0, 1}));

  const auto b22 = fock::enumerate_basis(2, 2);
  REQUIRE(b22.size() == 3);
  CHECK(b22[0] == FockState({2, 0}));
  CHECK(b22[1] == FockState({1, 1}));
  CHECK(b22[2] == FockState({0, 2}));

  CHECK(fock::enumerate_basis(4, 2).size() == 10);
  CHECK(fock::basis_size(4, 2) == 10);
}

TEST_CASE("basis order is strictly descending lexicographic") {
  const auto basis = fock::enumerate_basis(4, 3);
  for (std::size_t i = 1; i < basis.size(); ++i) {
    CHECK(basis[i - 1].occupations() > basis[i].occupations());
  }
}

TEST_CASE("basis_index inverts enumeration") {
  for (int d : {1, 2, 3, 5}) {
    for (int n : {0, 1, 2, 4}) {
      const auto basis = fock::enumerate_basis(d, n);
      for (std::size_t i = 0; i < basis.size(); ++i) {
        CHECK(fock::basis_index(basis[i]) == i);
      }
    }
  }
}

TEST_CASE("permanent of small known matrices") {
  Eigen::MatrixXcd m(2, 2);
  m << 1, 2, 3, 4;
  CHECK(std::abs(fock::permanent(m) - Complex(10, 0)) < 1e-12);

  Eigen::MatrixXcd ones = Eigen::MatrixXcd::Ones(3, 3);
  CHECK(std::abs(fock::permanent(ones) - Complex(6, 0)) < 1e-12);

  Eigen::MatrixXcd one(1, 1);
  one << Complex(0, 2);
  CHECK(std::abs(fock::permanent(one) - Complex(0, 2)) < 1e-12);
}

TEST_CASE("identity unitary leaves states unchanged") {
  RngStream rng(11);
  const auto s = random_state(rng, 3, 2);
  const auto out = fock::apply_mode_unitary(ModeUnitary::identity(3), s);
  CHECK((out.amplitudes() - s.amplitudes()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("balanced splitter on |11> suppresses the coincidence term") {
  const auto in = StateVector::basis_state(FockState({1, 1}));
  const auto out = fock::apply_mode_unitary(fock::beamsplitter(0.5), in);

  CHECK(fock::detection_probability(out, FockState({1, 1})) < 1e-24);
  CHECK(fock::detection_probability(out, FockState({2, 0})) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(fock::detection_probability(out, FockState({0, 2})) == doctest::Approx(0.5).epsilon(1e-12));

  // -(|20> - |02>)/sqrt(2) for the rotation convention.
  const Complex a20 = out.amplitude(FockState({2, 0}));
  const Complex a02 = out.amplitude(FockState({0, 2}));
  CHECK(std::abs(a20 + a02) < 1e-12);
  CHECK(std::abs(a20 - Complex(-1.0 / std::sqrt(2.0), 0.0)) < 1e-12);
}

TEST_CASE("detection probabilities sum to one on random two-photon states") {
  RngStream rng(21);
  for (int rep = 0; rep < 20; ++rep) {
    const auto s = random_state(rng, 3, 2);
    const auto u = ModeUnitary(testing::random_unitary(rng, 3));
    const auto out = fock::apply_mode_unitary(u, s);
    double total = 0.0;
    for (const auto& pattern : out.basis()) {
      total += fock::detection_probability(out, pattern);
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("absent component has zero detection probability") {
  Eigen::VectorXcd amps(3);
  amps << 1.0 / std::sqrt(2.0), 0.0, -1.0 / std::sqrt(2.0);
  const StateVector s(2, 2, amps);
  CHECK(fock::detection_probability(s, FockState({1, 1})) == 0.0);
}

TEST_CASE("photon number mismatch is rejected") {
  const auto s = StateVector::basis_state(FockState({1, 1}));
  CHECK_THROWS_AS(fock::detection_probability(s, FockState({1, 0})), std::invalid_argument);
  CHECK_THROWS_AS(
      fock::apply_mode_unitary(ModeUnitary::identity(3), s), std::invalid_argument);
}

TEST_CASE("non-unitary matrices are rejected") {
  Eigen::MatrixXcd m(2, 2);
  m << 1, 0, 0, 1.001;
  CHECK_THROWS_AS(ModeUnitary{m}, std::invalid_argument);
}

TEST_CASE("unitarity: evolution preserves the norm") {
  RngStream rng(31);
  for (int rep = 0; rep < 50; ++rep) {
    const int d = 2 + static_cast<int>(rng.next_u64() % 3);
    const int n = 1 + static_cast<int>(rng.next_u64() % 3);
    const auto s = random_state(rng, d, n);
    const auto u = ModeUnitary(testing::random_unitary(rng, d));
    const auto out = fock::apply_mode_unitary(u, s);
    CHECK(std::fabs(out.norm() - 1.0) < 1e-12);
  }
}

TEST_CASE("homomorphism: B after A equals BA") {
  RngStream rng(41);
  for (int rep = 0; rep < 100; ++rep) {
    const int d = 2 + static_cast<int>(rng.next_u64() % 3);  // up to 4 modes
    const int n = 1 + static_cast<int>(rng.next_u64() % 3);  // up to 3 photons
    const auto s = random_state(rng, d, n);
    const auto a = ModeUnitary(testing::random_unitary(rng, d));
    const auto b = ModeUnitary(testing::random_unitary(rng, d));

    const auto sequential = fock::apply_mode_unitary(b, fock::apply_mode_unitary(a, s));
    const auto composed = fock::apply_mode_unitary(a.then(b), s);
    CHECK((sequential.amplitudes() - composed.amplitudes()).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("permanent amplitudes equal direct expansion for two photons") {
  RngStream rng(51);
  for (int rep = 0; rep < 25; ++rep) {
    const int d = 2 + static_cast<int>(rng.next_u64() % 3);
    const auto u = ModeUnitary(testing::random_unitary(rng, d));
    const auto basis = fock::enumerate_basis(d, 2);
    for (const auto& in : basis) {
      const auto evolved = fock::apply_mode_unitary(u, StateVector::basis_state(in));
      for (const auto& out : basis) {
        const Complex via_permanent = fock::transition_amplitude(u, in, out);
        CHECK(std::abs(via_permanent - evolved.amplitude(out)) < 1e-12);
      }
    }
  }
}

TEST_CASE("two-photon product states assemble correctly") {
  Eigen::VectorXcd c1 = Eigen::VectorXcd::Zero(2);
  Eigen::VectorXcd c2 = Eigen::VectorXcd::Zero(2);
  c1[0] = 1.0;
  c2[1] = 1.0;
  const auto s = StateVector::two_photon_product(c1, c2);
  CHECK(std::abs(s.amplitude(FockState({1, 1})) - Complex(1, 0)) < 1e-15);
  CHECK(std::fabs(s.norm() - 1.0) < 1e-15);

  // Same mode twice: (a^+)^2|0> = sqrt(2)|2>.
  const auto dbl = StateVector::two_photon_product(c1, c1);
  CHECK(std::abs(dbl.amplitude(FockState({2, 0})) - Complex(std::sqrt(2.0), 0)) < 1e-15);
}

TEST_CASE("closed-form coincidence probability: boundary values") {
  CHECK(fock::two_photon_coincidence_prob(0.5, 1.0) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(fock::two_photon_coincidence_prob(0.5, 0.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(fock::two_photon_coincidence_prob(1.0, 0.3) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(fock::two_photon_coincidence_prob(0.0, 0.7) == doctest::Approx(1.0).epsilon(1e-15));
}

// Oracle: two photons with an internal two-dimensional label, simulated on
// 4 modes (2 spatial x 2 label); the second photon's label is
// sqrt(m) parallel + sqrt(1-m) perpendicular.
static double coincidence_via_fock(double transmissivity, double overlap) {
  Eigen::VectorXcd c1 = Eigen::VectorXcd::Zero(4);
  Eigen::VectorXcd c2 = Eigen::VectorXcd::Zero(4);
  c1[0] = 1.0;  // spatial 1, parallel
  c2[2] = std::sqrt(overlap);
  c2[3] = std::sqrt(1.0 - overlap);
  const auto in = StateVector::two_photon_product(c1, c2);

  const Eigen::MatrixXcd bs = fock::beamsplitter(transmissivity).matrix();
  Eigen::MatrixXcd u4 = Eigen::MatrixXcd::Zero(4, 4);
  for (int s = 0; s < 2; ++s) {
    for (int t = 0; t < 2; ++t) {
      for (int label = 0; label < 2; ++label) {
        u4(2 * s + label, 2 * t + label) = bs(s, t);
      }
    }
  }
  const auto out = fock::apply_mode_unitary(ModeUnitary(u4), in);

  double p = 0.0;
  for (const auto& pattern : out.basis()) {
    const int spatial1 = pattern[0] + pattern[1];
    const int spatial2 = pattern[2] + pattern[3];
    if (spatial1 == 1 && spatial2 == 1) {
      p += fock::detection_probability(out, pattern);
    }
  }
  return p;
}

TEST_CASE("closed form equals the internal-label simulation on a 21x21 grid") {
  for (int i = 0; i <= 20; ++i) {
    for (int j = 0; j <= 20; ++j) {
      const double t = i / 20.0;
      const double m = j / 20.0;
      CHECK(std::fabs(fock::two_photon_coincidence_prob(t, m) - coincidence_via_fock(t, m)) <
            1e-12);
    }
  }
}
