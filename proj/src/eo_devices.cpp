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

#include "eoqsim/eo_devices.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace eoqsim::eo {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

// Directional coupler with cross-coupling ratio eta.
Eigen::Matrix2cd coupler(double eta) {
  Eigen::Matrix2cd c;
  const double t = std::sqrt(1.0 - eta);
  const double r = std::sqrt(eta);
  c << t, -kI * r, -kI * r, t;
  return c;
}

Eigen::Matrix2cd mzi_matrix(double theta, double eps) {
  const Eigen::Matrix2cd c_in = coupler(0.5 - eps);
  const Eigen::Matrix2cd c_out = coupler(0.5 + eps);
  Eigen::Matrix2cd arms = Eigen::Matrix2cd::Zero();
  arms(0, 0) = std::exp(kI * (theta / 2.0));
  arms(1, 1) = std::exp(-kI * (theta / 2.0));
  return c_out * arms * c_in;
}

}  // namespace

void MziCalibration::validate() const {
  if (v_cross == v_balanced) {
    throw std::invalid_argument("MziCalibration: v_cross equals v_balanced");
  }
  if (extinction_visibility < 0.0 || extinction_visibility > 1.0) {
    throw std::invalid_argument("MziCalibration: extinction_visibility outside [0,1]");
  }
}

MziCalibration MziCalibration::for_switching_efficiency(double efficiency,
                                                        double v_cross,
                                                        double v_balanced) {
  if (efficiency <= 0.0 || efficiency > 1.0) {
    throw std::invalid_argument("for_switching_efficiency: efficiency outside (0,1]");
  }
  MziCalibration cal;
  cal.v_cross = v_cross;
  cal.v_balanced = v_balanced;
  // efficiency = 1 - 4 eps^2 and visibility = (1-4eps^2)/(1+4eps^2).
  cal.extinction_visibility = efficiency / (2.0 - efficiency);
  cal.validate();
  return cal;
}

double MziCalibration::voltage_of_theta(double theta) const {
  return v_cross + theta * (v_balanced - v_cross) / (kPi / 2.0);
}

double MziCalibration::coupler_offset() const {
  const double v = extinction_visibility;
  return 0.5 * std::sqrt((1.0 - v) / (1.0 + v));
}

double MziCalibration::switching_efficiency() const {
  const double eps = coupler_offset();
  return 1.0 - 4.0 * eps * eps;
}

double theta_of_voltage(const MziCalibration& cal, double volts) {
  return (kPi / 2.0) * (volts - cal.v_cross) / (cal.v_balanced - cal.v_cross);
}

fock::ModeUnitary mzi_mode_unitary(const MziCalibration& cal, double theta) {
  return fock::ModeUnitary(mzi_matrix(theta, cal.coupler_offset()));
}

fock::ModeUnitary mzi_mode_unitary(double theta) {
  return fock::ModeUnitary(mzi_matrix(theta, 0.0));
}

double cross_port_probability(const MziCalibration& cal, double theta) {
  return std::norm(mzi_matrix(theta, cal.coupler_offset())(1, 0));
}

TwoPhotonMziAmplitudes two_photon_mzi_amplitudes(double theta) {
  return TwoPhotonMziAmplitudes{
      Complex(std::sin(theta) / std::sqrt(2.0), 0.0),
      Complex(-std::cos(theta), 0.0),
      Complex(-std::sin(theta) / std::sqrt(2.0), 0.0),
  };
}

double mzi_two_photon_coincidence(const MziCalibration& cal, double theta,
                                  double overlap) {
  const Eigen::Matrix2cd u = mzi_matrix(theta, cal.coupler_offset());
  const Complex direct = u(0, 0) * u(1, 1);
  const Complex exchange = u(0, 1) * u(1, 0);
  const double coherent = std::norm(direct + exchange);
  const double incoherent = std::norm(direct) + std::norm(exchange);
  return overlap * coherent + (1.0 - overlap) * incoherent;
}

DriveWaveform DriveWaveform::dc(double level_v) {
  DriveWaveform w;
  w.kind_ = Kind::dc;
  w.level_a_ = level_v;
  return w;
}

DriveWaveform DriveWaveform::pulse(double baseline_v, double level_v, double start_s,
                                   double duration_s, double rise_time_s) {
  if (duration_s <= 0.0) throw std::invalid_argument("DriveWaveform: pulse duration <= 0");
  if (rise_time_s < 0.0) throw std::invalid_argument("DriveWaveform: rise_time < 0");
  DriveWaveform w;
  w.kind_ = Kind::pulse;
  w.level_a_ = baseline_v;
  w.level_b_ = level_v;
  w.start_ = start_s;
  w.duration_ = duration_s;
  w.rise_time_ = rise_time_s;
  return w;
}

DriveWaveform DriveWaveform::square(double low_v, double high_v, double period_s,
                                    double rise_time_s) {
  if (period_s <= 0.0) throw std::invalid_argument("DriveWaveform: square period <= 0");
  if (rise_time_s < 0.0) throw std::invalid_argument("DriveWaveform: rise_time < 0");
  if (rise_time_s / 0.8 > period_s / 2.0) {
    throw std::invalid_argument("DriveWaveform: ramp longer than half period");
  }
  DriveWaveform w;
  w.kind_ = Kind::square;
  w.level_a_ = low_v;
  w.level_b_ = high_v;
  w.period_ = period_s;
  w.rise_time_ = rise_time_s;
  return w;
}

DriveWaveform& DriveWaveform::with_ringing(const Ringing& r) {
  if (r.amplitude_v != 0.0) {
    if (r.damping_time_s <= 0.0 || r.frequency_hz <= 0.0) {
      throw std::invalid_argument(
          "DriveWaveform: ringing needs positive frequency and damping time");
    }
    ringing_ = r;
  } else {
    ringing_.reset();
  }
  return *this;
}

double DriveWaveform::ramp_width() const { return rise_time_ / 0.8; }

namespace {

// Linear ramp starting at t_edge, clamped to its endpoints.
double ramp(double t, double t_edge, double width, double from, double to) {
  if (width <= 0.0) return (t < t_edge) ? from : to;
  const double x = (t - t_edge) / width;
  if (x <= 0.0) return from;
  if (x >= 1.0) return to;
  return from + (to - from) * x;
}

double ring_after(const Ringing& r, double sign, double t_since_settle) {
  if (t_since_settle <= 0.0) return 0.0;
  return sign * r.amplitude_v * std::exp(-t_since_settle / r.damping_time_s) *
         std::sin(2.0 * kPi * r.frequency_hz * t_since_settle);
}

}  // namespace

double DriveWaveform::ringing_contribution(double t) const {
  if (!ringing_) return 0.0;
  const Ringing& r = *ringing_;
  const double w = ramp_width();
  // Edges older than ~30 damping times are numerically silent.
  const double cutoff = 30.0 * r.damping_time_s;

  double total = 0.0;
  if (kind_ == Kind::pulse) {
    total += ring_after(r, (level_b_ > level_a_) ? 1.0 : -1.0, t - (start_ + w));
    total += ring_after(r, (level_b_ > level_a_) ? -1.0 : 1.0, t - (start_ + duration_ + w));
  } else if (kind_ == Kind::square) {
    // Walk completed edges backwards from t: rising at n*T, falling at n*T + T/2.
    const double half = period_ / 2.0;
    for (double edge = std::floor((t - w) / half) * half; edge > t - w - cutoff;
         edge -= half) {
      const bool rising = std::fabs(std::remainder(edge, period_)) < half / 2.0;
      total += ring_after(r, rising ? 1.0 : -1.0, t - (edge + w));
    }
  }
  return total;
}

double DriveWaveform::voltage_at(double t) const {
  double v = level_a_;
  switch (kind_) {
    case Kind::dc:
      return level_a_;
    case Kind::pulse: {
      const double w = ramp_width();
      if (t < start_ + duration_) {
        v = ramp(t, start_, w, level_a_, level_b_);
      } else {
        v = ramp(t, start_ + duration_, w, level_b_, level_a_);
      }
      break;
    }
    case Kind::square: {
      const double w = ramp_width();
      const double half = period_ / 2.0;
      double p = std::fmod(t, period_);
      if (p < 0.0) p += period_;
      if (p < half) {
        v = ramp(p, 0.0, w, level_a_, level_b_);
      } else {
        v = ramp(p, half, w, level_b_, level_a_);
      }
      break;
    }
  }
  return v + ringing_contribution(t);
}

double theta_trace(const DriveWaveform& w, const MziCalibration& cal, double t) {
  return theta_of_voltage(cal, w.voltage_at(t));
}

void PcCalibration::validate() const {
  if (stages < 1) throw std::invalid_argument("PcCalibration: stages < 1");
  if (!std::isfinite(gain_x) || !std::isfinite(gain_z) || !std::isfinite(offset_z)) {
    throw std::invalid_argument("PcCalibration: non-finite gains");
  }
}

WaveplateSetting waveplate_of_voltages(const PcCalibration& cal, double v1, double v2) {
  const double sx = cal.gain_x * (v1 - v2);
  const double sz = cal.gain_z * (v1 + v2) + cal.offset_z;
  WaveplateSetting ws;
  ws.retardance = std::hypot(sx, sz);
  double axis = 0.5 * std::atan2(sx, sz);
  if (axis < 0.0) axis += kPi;  // phi and phi + pi are the same plate
  ws.axis_angle = axis;
  return ws;
}

namespace {

Eigen::Matrix2cd stage_matrix(double retardance, double axis_angle) {
  const double c = std::cos(retardance / 2.0);
  const double s = std::sin(retardance / 2.0);
  const double nx = std::sin(2.0 * axis_angle);
  const double nz = std::cos(2.0 * axis_angle);
  Eigen::Matrix2cd m;
  m << Complex(c, s * nz), Complex(0.0, s * nx),
       Complex(0.0, s * nx), Complex(c, -s * nz);
  return m;
}

}  // namespace

fock::ModeUnitary pc_stage_unitary(const WaveplateSetting& ws) {
  return fock::ModeUnitary(stage_matrix(ws.retardance, ws.axis_angle));
}

fock::ModeUnitary pc_unitary(const PcCalibration& cal, double v1, double v2) {
  cal.validate();
  const WaveplateSetting ws = waveplate_of_voltages(cal, v1, v2);
  // Same axis in every stage: compose by summing retardances.
  return fock::ModeUnitary(stage_matrix(cal.stages * ws.retardance, ws.axis_angle));
}

}  // namespace eoqsim::eo
