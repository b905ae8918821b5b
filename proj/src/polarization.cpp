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

#include "eoqsim/polarization.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace eoqsim::pol {

namespace {
using Complex = std::complex<double>;
}

Eigen::Vector2cd PolarizationState::jones() const {
  Eigen::Vector2cd j;
  j << Complex(std::cos(alpha), 0.0), std::exp(Complex(0.0, beta)) * std::sin(alpha);
  return j;
}

PolarizationState PolarizationState::from_jones(const Eigen::Vector2cd& j) {
  const double nh = std::abs(j[0]);
  const double nv = std::abs(j[1]);
  PolarizationState p;
  p.alpha = std::atan2(nv, nh);
  p.beta = (nh == 0.0 || nv == 0.0) ? 0.0 : std::arg(j[1] * std::conj(j[0]));
  return p;
}

double coincidence_prob(const PolarizationState& p1, const PolarizationState& p2) {
  const Complex term = std::cos(p1.alpha) * std::sin(p2.alpha) *
                           std::exp(Complex(0.0, p2.beta)) -
                       std::cos(p2.alpha) * std::sin(p1.alpha) *
                           std::exp(Complex(0.0, p1.beta));
  return 0.5 * std::norm(term);
}

double coincidence_prob_jones(const Eigen::Vector2cd& j1, const Eigen::Vector2cd& j2) {
  const double n1 = j1.squaredNorm();
  const double n2 = j2.squaredNorm();
  if (n1 == 0.0 || n2 == 0.0) {
    throw std::invalid_argument("coincidence_prob_jones: zero Jones vector");
  }
  const double overlap = std::norm(j1.dot(j2)) / (n1 * n2);
  return 0.5 * (1.0 - overlap);
}

double squared_overlap(const PolarizationState& p1, const PolarizationState& p2) {
  const Complex inner = std::cos(p1.alpha) * std::cos(p2.alpha) +
                        std::sin(p1.alpha) * std::sin(p2.alpha) *
                            std::exp(Complex(0.0, p2.beta - p1.beta));
  return std::norm(inner);
}

double Gradient::norm() const { return std::hypot(d_alpha, d_beta); }

Gradient coincidence_grad(double alpha, double beta, double gamma, double delta) {
  Gradient g;
  g.d_alpha = 0.5 * (std::sin(2.0 * alpha) * std::cos(2.0 * gamma) -
                     std::cos(2.0 * alpha) * std::sin(2.0 * gamma) *
                         std::cos(delta - beta));
  g.d_beta =
      0.25 * std::sin(beta - delta) * std::sin(2.0 * alpha) * std::sin(2.0 * gamma);
  return g;
}

StationaryClass classify_stationary(double alpha, double beta, double gamma,
                                    double delta, double grad_tol, double overlap_tol) {
  if (grad_tol <= 0.0 || overlap_tol <= 0.0) {
    throw std::invalid_argument("classify_stationary: tolerances must be positive");
  }
  if (coincidence_grad(alpha, beta, gamma, delta).norm() >= grad_tol) {
    return StationaryClass::not_stationary;
  }
  const double overlap =
      squared_overlap(PolarizationState{alpha, beta}, PolarizationState{gamma, delta});
  if (overlap > 1.0 - overlap_tol) return StationaryClass::parallel;
  if (overlap < overlap_tol) return StationaryClass::orthogonal;
  throw std::runtime_error(
      "classify_stationary: stationary point with intermediate overlap " +
      std::to_string(overlap) + " (saddle; not an extremum)");
}

}  // namespace eoqsim::pol
