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

#ifndef EOQSIM_FOCK_HPP
#define EOQSIM_FOCK_HPP

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace eoqsim::fock {

using Complex = std::complex<double>;

/// Occupation-number basis state: photon count per optical mode.
class FockState {
 public:
  explicit FockState(std::vector<int> occupations);

  int num_modes() const { return static_cast<int>(occ_.size()); }
  int photon_number() const;
  int operator[](int mode) const { return occ_[static_cast<std::size_t>(mode)]; }
  const std::vector<int>& occupations() const { return occ_; }

  bool operator==(const FockState&) const = default;

  /// e.g. "|210>"
  std::string to_string() const;

 private:
  std::vector<int> occ_;
};

/// Number of n-photon states over d modes: C(n + d - 1, n).
std::size_t basis_size(int num_modes, int num_photons);

/// All n-photon states over d modes, lexicographically descending on the
/// occupation vector. This order is fixed; amplitude storage, detection
/// probabilities and CSV output all rely on it.
std::vector<FockState> enumerate_basis(int num_modes, int num_photons);

/// Position of `s` in enumerate_basis(s.num_modes(), s.photon_number()).
std::size_t basis_index(const FockState& s);

/// Unitary acting on mode creation operators: column j is the image of
/// mode j, i.e. a_j^+ -> sum_i U(i,j) a_i^+.
class ModeUnitary {
 public:
  explicit ModeUnitary(Eigen::MatrixXcd matrix, double tol = 1e-12);

  int dim() const { return static_cast<int>(m_.rows()); }
  const Eigen::MatrixXcd& matrix() const { return m_; }

  static ModeUnitary identity(int dim);

  /// Composition: this circuit followed by `later` (matrix product
  /// later * this).
  ModeUnitary then(const ModeUnitary& later) const;

 private:
  Eigen::MatrixXcd m_;
};

/// Two-mode beamsplitter with the given intensity transmissivity, using the
/// real rotation convention
///   a_1^+ -> sqrt(T) a_1^+ + sqrt(1-T) a_2^+
///   a_2^+ -> -sqrt(1-T) a_1^+ + sqrt(T) a_2^+
/// At T = 1/2 this sends |11> to -(|20> - |02>)/sqrt(2) (global phase -1).
ModeUnitary beamsplitter(double transmissivity);

/// Superposition over the fixed-photon-number basis of `num_modes` modes.
/// Amplitudes are stored dense in enumerate_basis order.
class StateVector {
 public:
  StateVector(int num_modes, int num_photons, Eigen::VectorXcd amplitudes);

  static StateVector basis_state(const FockState& s);

  /// Two photons created in single-photon wavepackets c1 and c2 (coefficient
  /// vectors over modes, each of unit norm). The result is normalized only
  /// when the two wavepackets occupy disjoint or orthogonal mode supports.
  static StateVector two_photon_product(const Eigen::VectorXcd& c1,
                                        const Eigen::VectorXcd& c2);

  int num_modes() const { return num_modes_; }
  int num_photons() const { return num_photons_; }
  const Eigen::VectorXcd& amplitudes() const { return amps_; }
  Complex amplitude(const FockState& s) const;
  double norm() const { return amps_.norm(); }
  const std::vector<FockState>& basis() const;

 private:
  int num_modes_;
  int num_photons_;
  Eigen::VectorXcd amps_;
  mutable std::vector<FockState> basis_cache_;
};

/// Homomorphic lift of a mode unitary to the photon-number state space.
/// Uses direct creation-operator expansion for <= 2 photons and the
/// permanent-based transition matrix otherwise; both agree to 1e-12.
StateVector apply_mode_unitary(const ModeUnitary& u, const StateVector& s);

/// |<pattern|s>|^2. Throws on photon-number mismatch.
double detection_probability(const StateVector& s, const FockState& pattern);

/// Permanent of a square matrix (Ryser's formula, Gray-code order).
Complex permanent(const Eigen::MatrixXcd& m);

/// Single transition amplitude <out| lift(U) |in> via the permanent of the
/// row/column-repeated submatrix with occupation-factorial normalization.
Complex transition_amplitude(const ModeUnitary& u, const FockState& in,
                             const FockState& out);

/// Coincidence probability for two photons meeting at a beamsplitter of the
/// given transmissivity T with squared wavepacket overlap `overlap`:
///   T^2 + R^2 - 2 T R overlap,  R = 1 - T.
/// Equals the four-mode (2 spatial x 2 internal label) Fock simulation.
double two_photon_coincidence_prob(double transmissivity, double overlap);

}  // namespace eoqsim::fock

#endif
