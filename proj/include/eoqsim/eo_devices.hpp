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

#ifndef EOQSIM_EO_DEVICES_HPP
#define EOQSIM_EO_DEVICES_HPP

#include <complex>
#include <optional>

#include "eoqsim/fock.hpp"

namespace eoqsim::eo {

using Complex = std::complex<double>;

/// Voltage-to-phase calibration of the interferometer.
///
/// The internal phase is linear through two measured points:
///   theta(v) = (pi/2) (v - v_cross) / (v_balanced - v_cross)
/// v_cross is the swap point (theta = 0), v_balanced the 50:50 point
/// (theta = pi/2). Directional-coupler imperfection is folded into one
/// classical-fringe visibility: the two couplers get splitting ratios
/// 1/2 -+ eps, which makes the cross-port fringe run between 4 eps^2 and 1,
/// i.e. visibility (1 - 4 eps^2)/(1 + 4 eps^2).
struct MziCalibration {
  double v_cross = -1.6;
  double v_balanced = 0.5;
  double extinction_visibility = 1.0;

  /// Calibration whose DC cross-port extinction gives the requested
  /// switching efficiency 1 - 4 eps^2 (efficiency = 2V/(1+V)).
  static MziCalibration for_switching_efficiency(double efficiency,
                                                 double v_cross = -1.6,
                                                 double v_balanced = 0.5);

  /// Voltage change for a pi phase shift: 2 (v_balanced - v_cross).
  double v_pi() const { return 2.0 * (v_balanced - v_cross); }
  double voltage_of_theta(double theta) const;
  /// Coupler splitting-ratio offset eps implied by extinction_visibility.
  double coupler_offset() const;
  /// 1 - 4 eps^2, the plateau ratio of a full swap against the resting point.
  double switching_efficiency() const;

  void validate() const;
};

double theta_of_voltage(const MziCalibration& cal, double volts);

/// Interferometer as a mode unitary: coupler, +-theta/2 arm phases, coupler.
/// For ideal couplers |10> maps to sin(theta/2)|10> - cos(theta/2)|01> up to
/// a global phase of i.
fock::ModeUnitary mzi_mode_unitary(const MziCalibration& cal, double theta);
fock::ModeUnitary mzi_mode_unitary(double theta);  // ideal couplers

/// Probability that a photon entering port 1 leaves on port 2 (the switched
/// port): 1 at theta = 0, the extinction floor 4 eps^2 at theta = pi.
double cross_port_probability(const MziCalibration& cal, double theta);

/// Amplitudes of |11> evolved through the ideal interferometer, over
/// {|20>, |11>, |02>}: (sin(theta)/sqrt(2), -cos(theta), -sin(theta)/sqrt(2)).
struct TwoPhotonMziAmplitudes {
  Complex a20;
  Complex a11;
  Complex a02;
};
TwoPhotonMziAmplitudes two_photon_mzi_amplitudes(double theta);

/// Coincidence probability for |11> through the interferometer when the two
/// photons have squared wavepacket overlap `overlap`: the coherent permanent
/// term weighted by the overlap plus the distinguishable product term.
double mzi_two_photon_coincidence(const MziCalibration& cal, double theta,
                                  double overlap);

/// Damped sinusoid added after each drive edge, in the direction of the step.
struct Ringing {
  double amplitude_v = 0.0;
  double frequency_hz = 100e6;
  double damping_time_s = 40e-9;
};

/// Time-domain drive signal. Edges are linear ramps whose 10-90% transition
/// lasts `rise_time` (the full ramp is rise_time / 0.8); optional ringing is
/// superimposed after each completed edge.
class DriveWaveform {
 public:
  enum class Kind { dc, pulse, square };

  static DriveWaveform dc(double level_v);
  /// Pulse from `baseline_v` to `level_v`; `duration` is the time between
  /// the leading and trailing edge starts.
  static DriveWaveform pulse(double baseline_v, double level_v, double start_s,
                             double duration_s, double rise_time_s);
  /// Periodic square wave; the rising edge starts at t = 0 (mod period) and
  /// the falling edge at half period.
  static DriveWaveform square(double low_v, double high_v, double period_s,
                              double rise_time_s);

  DriveWaveform& with_ringing(const Ringing& r);

  Kind kind() const { return kind_; }
  double rise_time() const { return rise_time_; }
  /// Full linear-ramp duration (rise_time / 0.8).
  double ramp_width() const;
  double period() const { return period_; }
  double pulse_start() const { return start_; }
  double pulse_duration() const { return duration_; }
  double low_level() const { return level_a_; }
  double high_level() const { return level_b_; }
  bool has_ringing() const { return ringing_.has_value(); }

  double voltage_at(double t) const;

 private:
  DriveWaveform() = default;

  double ringing_contribution(double t) const;

  Kind kind_ = Kind::dc;
  double level_a_ = 0.0;  // dc level / pulse baseline / square low
  double level_b_ = 0.0;  // pulse level / square high
  double start_ = 0.0;
  double duration_ = 0.0;
  double period_ = 0.0;
  double rise_time_ = 0.0;
  std::optional<Ringing> ringing_;
};

/// Interferometer phase seen by a photon arriving at time t.
double theta_trace(const DriveWaveform& w, const MziCalibration& cal, double t);

/// Electrode map of the polarization controller. The difference channel
/// v1 - v2 drives the sigma_x retardance component, the sum channel v1 + v2
/// drives sigma_z on top of the built-in birefringence offset. All stages
/// are identical and driven in parallel.
struct PcCalibration {
  double gain_x = 0.15;   // rad per volt on (v1 - v2)
  double gain_z = 0.15;   // rad per volt on (v1 + v2)
  double offset_z = 0.0;  // rad
  int stages = 4;

  void validate() const;
};

/// Tunable waveplate: retardance (phase between fast and slow axes) and
/// axis angle in [0, pi).
struct WaveplateSetting {
  double retardance = 0.0;
  double axis_angle = 0.0;
};

WaveplateSetting waveplate_of_voltages(const PcCalibration& cal, double v1, double v2);

/// One controller stage on the {H, V} modes:
///   exp[ i (retardance/2) (sigma_x sin 2phi + sigma_z cos 2phi) ]
/// Retardance pi with phi = pi/4 swaps H and V up to a global phase.
fock::ModeUnitary pc_stage_unitary(const WaveplateSetting& ws);

/// All stages in series. Identical stages share one axis, so this equals a
/// single stage with stages x retardance.
fock::ModeUnitary pc_unitary(const PcCalibration& cal, double v1, double v2);

}  // namespace eoqsim::eo

#endif
