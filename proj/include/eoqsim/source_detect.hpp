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

#ifndef EOQSIM_SOURCE_DETECT_HPP
#define EOQSIM_SOURCE_DETECT_HPP

#include <cstdint>

#include "eoqsim/eo_devices.hpp"
#include "eoqsim/rng.hpp"

namespace eoqsim::source {

/// Downconversion pair source behind bandpass filters.
struct SourceModel {
  double rep_rate_hz = 80e6;
  double pair_prob = 0.01;         // one pair per pulse
  double double_pair_prob = 0.0;   // two pairs per pulse
  double center_wavelength_m = 1550e-9;
  double filter_fwhm_m = 10e-9;
  double max_overlap = 0.95;       // indistinguishability at zero delay

  /// RMS width of the wavepacket-overlap Gaussian in delay. The filter is
  /// taken as Gaussian in frequency: sigma_nu = (c dlambda / lambda^2) /
  /// (2 sqrt(2 ln 2)), and the overlap envelope uses
  /// sigma_tau = 1 / (4 pi sigma_nu).
  double coherence_sigma_s() const;

  void validate() const;
};

struct DetectorModel {
  double efficiency = 0.18;
  double dark_rate_hz = 1000.0;
  double jitter_fwhm_s = 60e-12;

  void validate() const;
};

struct CoincidenceSetup {
  double window_s = 1e-9;
  double integration_time_s = 1.0;
  double transmission1 = 0.05;  // arm 1 coupling/propagation transmission
  double transmission2 = 0.05;

  void validate() const;
};

/// Squared wavepacket overlap of the two photons at the given relative
/// delay: max_overlap * exp(-delay^2 / (2 sigma_tau^2)).
double overlap_vs_delay(const SourceModel& src, double delay_s);

struct Rates {
  double singles1_hz = 0.0;
  double singles2_hz = 0.0;
  double coincidences_hz = 0.0;  // true + accidental
  double accidentals_hz = 0.0;
};

/// Counting model. True coincidences scale with the two-photon coincidence
/// probability p_cc; accidentals combine the uncorrelated-singles window
/// product with a flat double-pair term
///   rep_rate * double_pair_prob * eta1 eta2 T1 T2 * 1/2
/// (1/2 being the coincidence probability of two independent photons at a
/// balanced splitter). Double-pair background is delay- and
/// polarization-independent by construction.
Rates expected_rates(double p_cc, const SourceModel& src, const DetectorModel& d1,
                     const DetectorModel& d2, const CoincidenceSetup& setup);

/// Poisson counts with mean rate * time from the given stream.
std::uint64_t sample_counts(double rate_hz, double time_s, RngStream& rng);

/// double_pair_prob that makes the fringe between coincidence rates at
/// p_min and p_max come out at `target_visibility` (max-min over max+min).
/// Throws if the target is unreachable (window accidentals already too big).
double solve_double_pair_prob(double target_visibility, double p_min, double p_max,
                              const SourceModel& src, const DetectorModel& d1,
                              const DetectorModel& d2, const CoincidenceSetup& setup);

/// Heralded single-photon switching through the interferometer: detector 1
/// triggers the drive pulse, the photon samples the drive at `delay` and is
/// counted on the switched port by detector 2.
struct HeraldedSwitchModel {
  SourceModel source;
  DetectorModel herald_det;   // trigger arm
  DetectorModel signal_det;   // switched-port arm
  CoincidenceSetup setup;
  eo::MziCalibration mzi;
  eo::DriveWaveform drive = eo::DriveWaveform::dc(0.0);
};

/// Expected heralded counts over the integration time at the given pulse
/// delay. Detector timing jitter smears the sampling instant with a
/// Gaussian (7-point Gauss-Hermite quadrature).
double heralded_switch_expected(double delay_s, const HeraldedSwitchModel& model);

/// One Poisson draw around heralded_switch_expected. Each herald routes the
/// photon independently, so thinning a Poisson herald process gives a
/// Poisson count at the thinned mean.
std::uint64_t heralded_switch_trial(double delay_s, const HeraldedSwitchModel& model,
                                    RngStream& rng);

}  // namespace eoqsim::source

#endif
