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

#include "eoqsim/source_detect.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace eoqsim::source {

namespace {

constexpr double kSpeedOfLight = 299792458.0;
constexpr double kFwhmToSigma = 2.3548200450309493;  // 2 sqrt(2 ln 2)

// Double-pair accidental: coincidence probability of two independent
// photons at a balanced splitter.
constexpr double kDoublePairBaseline = 0.5;

}  // namespace

void SourceModel::validate() const {
  if (rep_rate_hz <= 0.0) throw std::invalid_argument("SourceModel: rep_rate_hz <= 0");
  if (pair_prob < 0.0 || pair_prob > 1.0) {
    throw std::invalid_argument("SourceModel: pair_prob outside [0,1]");
  }
  if (double_pair_prob < 0.0 || double_pair_prob > pair_prob) {
    throw std::invalid_argument("SourceModel: double_pair_prob outside [0, pair_prob]");
  }
  if (filter_fwhm_m <= 0.0) throw std::invalid_argument("SourceModel: filter_fwhm_m <= 0");
  if (center_wavelength_m <= 0.0) {
    throw std::invalid_argument("SourceModel: center_wavelength_m <= 0");
  }
  if (max_overlap < 0.0 || max_overlap > 1.0) {
    throw std::invalid_argument("SourceModel: max_overlap outside [0,1]");
  }
}

double SourceModel::coherence_sigma_s() const {
  const double fwhm_nu =
      kSpeedOfLight * filter_fwhm_m / (center_wavelength_m * center_wavelength_m);
  const double sigma_nu = fwhm_nu / kFwhmToSigma;
  return 1.0 / (4.0 * std::numbers::pi * sigma_nu);
}

void DetectorModel::validate() const {
  if (efficiency < 0.0 || efficiency > 1.0) {
    throw std::invalid_argument("DetectorModel: efficiency outside [0,1]");
  }
  if (dark_rate_hz < 0.0) throw std::invalid_argument("DetectorModel: dark_rate_hz < 0");
  if (jitter_fwhm_s < 0.0) throw std::invalid_argument("DetectorModel: jitter_fwhm_s < 0");
}

void CoincidenceSetup::validate() const {
  if (window_s <= 0.0) throw std::invalid_argument("CoincidenceSetup: window_s <= 0");
  if (integration_time_s <= 0.0) {
    throw std::invalid_argument("CoincidenceSetup: integration_time_s <= 0");
  }
  if (transmission1 < 0.0 || transmission1 > 1.0 || transmission2 < 0.0 ||
      transmission2 > 1.0) {
    throw std::invalid_argument("CoincidenceSetup: transmission outside [0,1]");
  }
}

double overlap_vs_delay(const SourceModel& src, double delay_s) {
  const double sigma = src.coherence_sigma_s();
  const double x = delay_s / sigma;
  return src.max_overlap * std::exp(-0.5 * x * x);
}

Rates expected_rates(double p_cc, const SourceModel& src, const DetectorModel& d1,
                     const DetectorModel& d2, const CoincidenceSetup& setup) {
  if (p_cc < 0.0 || p_cc > 1.0) {
    throw std::invalid_argument("expected_rates: p_cc outside [0,1]");
  }
  const double pair_rate = src.rep_rate_hz * src.pair_prob;
  const double arm1 = d1.efficiency * setup.transmission1;
  const double arm2 = d2.efficiency * setup.transmission2;

  Rates r;
  r.singles1_hz = pair_rate * arm1 + d1.dark_rate_hz;
  r.singles2_hz = pair_rate * arm2 + d2.dark_rate_hz;
  const double true_coinc = pair_rate * arm1 * arm2 * p_cc;
  const double window_acc = r.singles1_hz * r.singles2_hz * setup.window_s;
  const double double_acc =
      src.rep_rate_hz * src.double_pair_prob * arm1 * arm2 * kDoublePairBaseline;
  r.accidentals_hz = window_acc + double_acc;
  r.coincidences_hz = true_coinc + r.accidentals_hz;
  return r;
}

std::uint64_t sample_counts(double rate_hz, double time_s, RngStream& rng) {
  if (rate_hz < 0.0) throw std::invalid_argument("sample_counts: negative rate");
  if (time_s < 0.0) throw std::invalid_argument("sample_counts: negative time");
  return rng.next_poisson(rate_hz * time_s);
}

double solve_double_pair_prob(double target_visibility, double p_min, double p_max,
                              const SourceModel& src, const DetectorModel& d1,
                              const DetectorModel& d2, const CoincidenceSetup& setup) {
  if (target_visibility <= 0.0 || target_visibility >= 1.0) {
    throw std::invalid_argument("solve_double_pair_prob: target outside (0,1)");
  }
  if (!(p_max > p_min)) {
    throw std::invalid_argument("solve_double_pair_prob: p_max must exceed p_min");
  }
  SourceModel clean = src;
  clean.double_pair_prob = 0.0;
  const Rates base = expected_rates(0.0, clean, d1, d2, setup);
  const double window_acc = base.accidentals_hz;

  const double signal =
      src.rep_rate_hz * src.pair_prob * d1.efficiency * setup.transmission1 *
      d2.efficiency * setup.transmission2;
  // V = S (pM - pm) / (S (pM + pm) + 2 W + 2 D), solve for the double-pair
  // accidental rate D.
  const double needed =
      0.5 * (signal * (p_max - p_min) / target_visibility - signal * (p_max + p_min)) -
      window_acc;
  if (needed < 0.0) {
    throw std::invalid_argument(
        "solve_double_pair_prob: target visibility unreachable with current accidentals");
  }
  const double double_prob =
      needed / (src.rep_rate_hz * d1.efficiency * setup.transmission1 * d2.efficiency *
                setup.transmission2 * kDoublePairBaseline);
  if (double_prob > src.pair_prob) {
    throw std::invalid_argument(
        "solve_double_pair_prob: solution exceeds pair_prob; raise pair_prob");
  }
  return double_prob;
}

namespace {

// Nodes/weights for a 7-point Gauss-Hermite rule in the probabilists'
// scaling: E[f(Z)] ~ sum w_k f(x_k) for Z standard normal.
constexpr int kGhPoints = 7;
constexpr double kGhNodes[kGhPoints] = {
    -3.7504397177257425, -2.3667594107345415, -1.1544053947399682, 0.0,
    1.1544053947399682, 2.3667594107345415, 3.7504397177257425};
constexpr double kGhWeights[kGhPoints] = {
    0.0005482688559722185, 0.030757123967586494, 0.24012317860501253,
    0.45714285714285713, 0.24012317860501253, 0.030757123967586494,
    0.0005482688559722185};

double routed_probability(double delay_s, const HeraldedSwitchModel& model) {
  const double sigma_h = model.herald_det.jitter_fwhm_s / kFwhmToSigma;
  const double sigma_s = model.signal_det.jitter_fwhm_s / kFwhmToSigma;
  const double sigma = std::hypot(sigma_h, sigma_s);
  if (sigma == 0.0) {
    return eo::cross_port_probability(
        model.mzi, eo::theta_trace(model.drive, model.mzi, delay_s));
  }
  double p = 0.0;
  for (int k = 0; k < kGhPoints; ++k) {
    const double t = delay_s + sigma * kGhNodes[k];
    p += kGhWeights[k] * eo::cross_port_probability(
                             model.mzi, eo::theta_trace(model.drive, model.mzi, t));
  }
  return p;
}

}  // namespace

double heralded_switch_expected(double delay_s, const HeraldedSwitchModel& model) {
  model.source.validate();
  model.herald_det.validate();
  model.signal_det.validate();
  model.setup.validate();
  model.mzi.validate();

  const double pair_rate = model.source.rep_rate_hz * model.source.pair_prob;
  const double herald_rate =
      pair_rate * model.herald_det.efficiency * model.setup.transmission1;
  const double trigger_rate = herald_rate + model.herald_det.dark_rate_hz;

  const double p_route = routed_probability(delay_s, model);

  // Un-heralded pairs see the resting interferometer; with the pulse tied to
  // the herald this only matters for the accidental background.
  const double t_rest = (model.drive.kind() == eo::DriveWaveform::Kind::pulse)
                            ? model.drive.pulse_start() - 10.0 * model.drive.ramp_width()
                            : delay_s;
  const double p_rest =
      eo::cross_port_probability(model.mzi, eo::theta_trace(model.drive, model.mzi, t_rest));
  const double heralded_frac = model.herald_det.efficiency * model.setup.transmission1;
  const double singles2 =
      pair_rate * model.signal_det.efficiency * model.setup.transmission2 *
          (heralded_frac * p_route + (1.0 - heralded_frac) * p_rest) +
      model.signal_det.dark_rate_hz;

  const double true_rate =
      herald_rate * p_route * model.signal_det.efficiency * model.setup.transmission2;
  const double accidental_rate = trigger_rate * singles2 * model.setup.window_s;
  return (true_rate + accidental_rate) * model.setup.integration_time_s;
}

std::uint64_t heralded_switch_trial(double delay_s, const HeraldedSwitchModel& model,
                                    RngStream& rng) {
  return rng.next_poisson(heralded_switch_expected(delay_s, model));
}

}  // namespace eoqsim::source
