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

#ifndef EOQSIM_POLARIZATION_HPP
#define EOQSIM_POLARIZATION_HPP

#include <Eigen/Dense>
#include <complex>

namespace eoqsim::pol {

/// Pure polarization state cos(alpha)|H> + e^{i beta} sin(alpha)|V>.
/// At alpha in {0, pi/2} the phase beta is gauge; comparisons therefore go
/// through overlaps, never through parameter equality.
struct PolarizationState {
  double alpha = 0.0;
  double beta = 0.0;

  Eigen::Vector2cd jones() const;
  /// Angles of a (not necessarily normalized) Jones vector, alpha in
  /// [0, pi/2], beta in (-pi, pi]; beta = 0 in the gauge cases.
  static PolarizationState from_jones(const Eigen::Vector2cd& j);
};

/// Probability that two photons in these polarization states leave by
/// different ports of a balanced splitter:
///   1/2 |cos a sin g e^{i d} - cos g e^{i b} sin a|^2, in [0, 1/2].
double coincidence_prob(const PolarizationState& p1, const PolarizationState& p2);

/// Same quantity from Jones vectors: (1 - |<j1|j2>|^2) / 2 for unit vectors.
double coincidence_prob_jones(const Eigen::Vector2cd& j1, const Eigen::Vector2cd& j2);

/// |<p1|p2>|^2; equals 1 - 2 coincidence_prob.
double squared_overlap(const PolarizationState& p1, const PolarizationState& p2);

struct Gradient {
  double d_alpha = 0.0;
  double d_beta = 0.0;

  double norm() const;
};

/// Partial derivatives of coincidence_prob with respect to the controlled
/// parameters (alpha, beta) of photon 1:
///   dP/dalpha = 1/2 [sin 2a cos 2g - cos 2a sin 2g cos(d - b)]
///   dP/dbeta  = 1/4  sin(b - d) sin 2a sin 2g
/// Both match central finite differences of coincidence_prob.
Gradient coincidence_grad(double alpha, double beta, double gamma, double delta);

enum class StationaryClass { parallel, orthogonal, not_stationary };

/// Classifies a point of the coincidence landscape. Zero-gradient extrema
/// are parallel (global minimum, overlap 1) or orthogonal (global maximum,
/// overlap 0). A vanishing gradient with intermediate overlap is a saddle
/// (photon 1 at a pole with quadrature relative phase) and is reported as an
/// inconsistency, since it is neither extremum class.
StationaryClass classify_stationary(double alpha, double beta, double gamma,
                                    double delta, double grad_tol, double overlap_tol);

}  // namespace eoqsim::pol

#endif
