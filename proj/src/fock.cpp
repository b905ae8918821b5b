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

#include "eoqsim/fock.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace eoqsim::fock {

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

void enumerate_rec(int modes_left, int photons_left, std::vector<int>& prefix,
                   std::vector<FockState>& out) {
  if (modes_left == 1) {
    prefix.push_back(photons_left);
    out.emplace_back(prefix);
    prefix.pop_back();
    return;
  }
  // Descending count in the leading mode gives descending lexicographic order.
  for (int k = photons_left; k >= 0; --k) {
    prefix.push_back(k);
    enumerate_rec(modes_left - 1, photons_left - k, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

FockState::FockState(std::vector<int> occupations) : occ_(std::move(occupations)) {
  if (occ_.empty()) throw std::invalid_argument("FockState: need at least one mode");
  for (int n : occ_) {
    if (n < 0) throw std::invalid_argument("FockState: negative occupation");
  }
}

int FockState::photon_number() const {
  int n = 0;
  for (int k : occ_) n += k;
  return n;
}

std::string FockState::to_string() const {
  std::string s = "|";
  for (int n : occ_) s += std::to_string(n);
  s += ">";
  return s;
}

std::size_t basis_size(int num_modes, int num_photons) {
  // C(n + d - 1, n) by incremental multiplication.
  std::size_t r = 1;
  for (int i = 1; i <= num_photons; ++i) {
    r = r * static_cast<std::size_t>(num_modes - 1 + i) / static_cast<std::size_t>(i);
  }
  return r;
}

std::vector<FockState> enumerate_basis(int num_modes, int num_photons) {
  if (num_modes < 1) throw std::invalid_argument("enumerate_basis: num_modes < 1");
  if (num_photons < 0) throw std::invalid_argument("enumerate_basis: num_photons < 0");
  std::vector<FockState> out;
  out.reserve(basis_size(num_modes, num_photons));
  std::vector<int> prefix;
  enumerate_rec(num_modes, num_photons, prefix, out);
  return out;
}

std::size_t basis_index(const FockState& s) {
  // Count states that precede s in descending lexicographic order: for each
  // mode, states whose leading occupation is larger than s's.
  const int d = s.num_modes();
  int photons_left = s.photon_number();
  std::size_t index = 0;
  for (int mode = 0; mode < d - 1; ++mode) {
    for (int k = photons_left; k > s[mode]; --k) {
      index += basis_size(d - mode - 1, photons_left - k);
    }
    photons_left -= s[mode];
  }
  return index;
}

ModeUnitary::ModeUnitary(Eigen::MatrixXcd matrix, double tol) : m_(std::move(matrix)) {
  if (m_.rows() != m_.cols() || m_.rows() < 1) {
    throw std::invalid_argument("ModeUnitary: matrix must be square");
  }
  const Eigen::MatrixXcd gram = m_.adjoint() * m_;
  const double err =
      (gram - Eigen::MatrixXcd::Identity(m_.rows(), m_.cols())).cwiseAbs().maxCoeff();
  if (err > tol) {
    throw std::invalid_argument("ModeUnitary: matrix is not unitary (deviation " +
                                std::to_string(err) + ")");
  }
}

ModeUnitary ModeUnitary::identity(int dim) {
  return ModeUnitary(Eigen::MatrixXcd::Identity(dim, dim));
}

ModeUnitary ModeUnitary::then(const ModeUnitary& later) const {
  if (later.dim() != dim()) throw std::invalid_argument("ModeUnitary::then: dimension mismatch");
  return ModeUnitary(later.m_ * m_);
}

ModeUnitary beamsplitter(double transmissivity) {
  if (transmissivity < 0.0 || transmissivity > 1.0) {
    throw std::invalid_argument("beamsplitter: transmissivity outside [0,1]");
  }
  const double t = std::sqrt(transmissivity);
  const double r = std::sqrt(1.0 - transmissivity);
  Eigen::MatrixXcd m(2, 2);
  m << t, -r, r, t;
  return ModeUnitary(m);
}

StateVector::StateVector(int num_modes, int num_photons, Eigen::VectorXcd amplitudes)
    : num_modes_(num_modes), num_photons_(num_photons), amps_(std::move(amplitudes)) {
  if (static_cast<std::size_t>(amps_.size()) != basis_size(num_modes, num_photons)) {
    throw std::invalid_argument("StateVector: amplitude count does not match basis size");
  }
}

StateVector StateVector::basis_state(const FockState& s) {
  Eigen::VectorXcd amps =
      Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(basis_size(s.num_modes(), s.photon_number())));
  amps[static_cast<Eigen::Index>(basis_index(s))] = 1.0;
  return StateVector(s.num_modes(), s.photon_number(), std::move(amps));
}

StateVector StateVector::two_photon_product(const Eigen::VectorXcd& c1,
                                            const Eigen::VectorXcd& c2) {
  if (c1.size() != c2.size()) {
    throw std::invalid_argument("two_photon_product: coefficient lengths differ");
  }
  const int d = static_cast<int>(c1.size());
  Eigen::VectorXcd amps =
      Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(basis_size(d, 2)));
  // (i,j) and (j,i) fall on the same pattern, which is the bosonic
  // symmetrization; (a^+)^2 |0> = sqrt(2) |2> gives the same-mode factor.
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      const Complex w = c1[i] * c2[j];
      if (w == Complex(0.0, 0.0)) continue;
      std::vector<int> occ(static_cast<std::size_t>(d), 0);
      ++occ[static_cast<std::size_t>(i)];
      ++occ[static_cast<std::size_t>(j)];
      const FockState pattern{occ};
      const double boson = (i == j) ? std::sqrt(2.0) : 1.0;
      amps[static_cast<Eigen::Index>(basis_index(pattern))] += w * boson;
    }
  }
  return StateVector(d, 2, std::move(amps));
}

Complex StateVector::amplitude(const FockState& s) const {
  if (s.num_modes() != num_modes_ || s.photon_number() != num_photons_) {
    throw std::invalid_argument("StateVector::amplitude: basis mismatch");
  }
  return amps_[static_cast<Eigen::Index>(basis_index(s))];
}

const std::vector<FockState>& StateVector::basis() const {
  if (basis_cache_.empty()) basis_cache_ = enumerate_basis(num_modes_, num_photons_);
  return basis_cache_;
}

namespace {

// Evolve one basis state by expanding the product of transformed creation
// operators, one photon at a time. `column` of u is the image of a mode.
Eigen::VectorXcd evolve_basis_state_direct(const Eigen::MatrixXcd& u, const FockState& in) {
  const int d = in.num_modes();
  // Dense amplitudes over the k-photon basis, grown photon by photon.
  Eigen::VectorXcd cur(1);
  cur[0] = 1.0;
  int photons_so_far = 0;
  for (int mode = 0; mode < d; ++mode) {
    for (int rep = 0; rep < in[mode]; ++rep) {
      const auto cur_basis = enumerate_basis(d, photons_so_far);
      Eigen::VectorXcd next =
          Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(basis_size(d, photons_so_far + 1)));
      for (std::size_t b = 0; b < cur_basis.size(); ++b) {
        const Complex amp = cur[static_cast<Eigen::Index>(b)];
        if (amp == Complex(0.0, 0.0)) continue;
        for (int target = 0; target < d; ++target) {
          const Complex w = u(target, mode);
          if (w == Complex(0.0, 0.0)) continue;
          std::vector<int> occ = cur_basis[b].occupations();
          const double raise = std::sqrt(static_cast<double>(occ[static_cast<std::size_t>(target)] + 1));
          ++occ[static_cast<std::size_t>(target)];
          next[static_cast<Eigen::Index>(basis_index(FockState{occ}))] += amp * w * raise;
        }
      }
      cur = std::move(next);
      ++photons_so_far;
    }
  }
  // Normalize away the input occupation factorials: |n> = prod (a^+)^n_i / sqrt(n_i!) |0>.
  double norm = 1.0;
  for (int mode = 0; mode < d; ++mode) norm *= factorial(in[mode]);
  cur /= std::sqrt(norm);
  return cur;
}

}  // namespace

Complex permanent(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("permanent: matrix must be square");
  const int n = static_cast<int>(m.rows());
  if (n == 0) return Complex(1.0, 0.0);
  if (n == 1) return m(0, 0);

  // Ryser with Gray-code subset updates:
  // per(A) = (-1)^n sum_{S != empty} (-1)^|S| prod_i sum_{j in S} A(i,j).
  Eigen::VectorXcd row_sums = Eigen::VectorXcd::Zero(n);
  Complex total(0.0, 0.0);
  std::uint64_t gray = 0;
  int popcount = 0;
  const std::uint64_t end = 1ULL << n;
  for (std::uint64_t k = 1; k < end; ++k) {
    const std::uint64_t next_gray = k ^ (k >> 1);
    const std::uint64_t changed = next_gray ^ gray;
    int col = 0;
    while (!((changed >> col) & 1ULL)) ++col;
    if (next_gray & changed) {
      row_sums += m.col(col);
      ++popcount;
    } else {
      row_sums -= m.col(col);
      --popcount;
    }
    gray = next_gray;
    Complex prod(1.0, 0.0);
    for (int i = 0; i < n; ++i) prod *= row_sums[i];
    total += ((popcount & 1) ? -1.0 : 1.0) * prod;
  }
  return ((n & 1) ? -1.0 : 1.0) * total;
}

Complex transition_amplitude(const ModeUnitary& u, const FockState& in, const FockState& out) {
  if (in.num_modes() != u.dim() || out.num_modes() != u.dim()) {
    throw std::invalid_argument("transition_amplitude: mode count mismatch");
  }
  const int n = in.photon_number();
  if (out.photon_number() != n) return Complex(0.0, 0.0);
  // Rows repeated per output occupation, columns per input occupation.
  std::vector<int> rows, cols;
  rows.reserve(static_cast<std::size_t>(n));
  cols.reserve(static_cast<std::size_t>(n));
  for (int mode = 0; mode < u.dim(); ++mode) {
    for (int r = 0; r < out[mode]; ++r) rows.push_back(mode);
    for (int c = 0; c < in[mode]; ++c) cols.push_back(mode);
  }
  Eigen::MatrixXcd sub(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      sub(i, j) = u.matrix()(rows[static_cast<std::size_t>(i)], cols[static_cast<std::size_t>(j)]);
    }
  }
  double norm = 1.0;
  for (int mode = 0; mode < u.dim(); ++mode) {
    norm *= factorial(in[mode]) * factorial(out[mode]);
  }
  return permanent(sub) / std::sqrt(norm);
}

StateVector apply_mode_unitary(const ModeUnitary& u, const StateVector& s) {
  if (u.dim() != s.num_modes()) {
    throw std::invalid_argument("apply_mode_unitary: dimension mismatch");
  }
  const int d = s.num_modes();
  const int n = s.num_photons();
  const auto& basis = s.basis();
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(s.amplitudes().size());

  if (n <= 2) {
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const Complex amp = s.amplitudes()[static_cast<Eigen::Index>(b)];
      if (amp == Complex(0.0, 0.0)) continue;
      out += amp * evolve_basis_state_direct(u.matrix(), basis[b]);
    }
    return StateVector(d, n, std::move(out));
  }

  for (std::size_t col = 0; col < basis.size(); ++col) {
    const Complex amp = s.amplitudes()[static_cast<Eigen::Index>(col)];
    if (amp == Complex(0.0, 0.0)) continue;
    for (std::size_t row = 0; row < basis.size(); ++row) {
      out[static_cast<Eigen::Index>(row)] += amp * transition_amplitude(u, basis[col], basis[row]);
    }
  }
  return StateVector(d, n, std::move(out));
}

double detection_probability(const StateVector& s, const FockState& pattern) {
  if (pattern.photon_number() != s.num_photons()) {
    throw std::invalid_argument("detection_probability: photon number mismatch");
  }
  if (pattern.num_modes() != s.num_modes()) {
    throw std::invalid_argument("detection_probability: mode count mismatch");
  }
  return std::norm(s.amplitude(pattern));
}

double two_photon_coincidence_prob(double transmissivity, double overlap) {
  const double t = transmissivity;
  const double r = 1.0 - t;
  return t * t + r * r - 2.0 * t * r * overlap;
}

}  // namespace eoqsim::fock
