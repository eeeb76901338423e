// Copyright (c) 2026 semg2v authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// EMG signal conditioning: zero-phase Butterworth bandpass plus fixed
// power-line notch chain. All filters run forward-backward over odd-reflected
// padding with steady-state section initial conditions, so constants map to
// the filter's DC response exactly and in-band components keep their phase.

#ifndef SEMG2V_DSP_HPP_
#define SEMG2V_DSP_HPP_

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "semg2v/io.hpp"

namespace semg2v::dsp {

// Second-order section, normalized so a0 == 1.
struct Biquad {
  double b0 = 1.0, b1 = 0.0, b2 = 0.0;
  double a1 = 0.0, a2 = 0.0;
};

struct SosFilter {
  std::vector<Biquad> sections;
  int design_order = 0;  // analog pole count; drives the filtfilt pad length
};

// Butterworth bandpass with `order` poles in total (order must be even;
// an order-4 filter uses a second-order lowpass prototype). Edges in Hz.
SosFilter design_butterworth_bandpass(int order, double low_hz, double high_hz,
                                      double sample_rate);

// Single notch at f0 with quality factor q.
Biquad design_notch(double f0_hz, double q, double sample_rate);

// Notches at base_hz, 2*base_hz, ... up to max_hz inclusive.
SosFilter design_notch_chain(double base_hz, double max_hz, double q,
                             double sample_rate);

// Complex frequency response of the single-pass filter at freq_hz.
std::complex<double> sos_response(const SosFilter& filter, double freq_hz,
                                  double sample_rate);

// Single-pass causal run with explicit initial conditions per section.
Eigen::VectorXd sos_filter(const SosFilter& filter, const Eigen::VectorXd& x);

// Zero-phase forward-backward run (magnitude response squared, zero lag).
Eigen::VectorXd filtfilt(const SosFilter& filter, const Eigen::VectorXd& x);

// ---- conditioning entry points -------------------------------------------------

inline constexpr int kEmgSampleRate = 2000;
inline constexpr int kEmgMinLength = 128;  // one analysis frame

// Throws if the recording violates the sampling contract (rate, equal-length
// channels, minimum length, finite values).
void validate_recording(const io::EmgData& rec);

io::EmgData bandpass(const io::EmgData& rec, double low_hz = 4.0,
                     double high_hz = 400.0);

io::EmgData notch_harmonics(const io::EmgData& rec, double base_hz = 50.0,
                            double max_hz = 400.0, double q = 30.0);

inline io::EmgData condition(const io::EmgData& rec) {
  return notch_harmonics(bandpass(rec));
}

}  // namespace semg2v::dsp

#endif  // SEMG2V_DSP_HPP_
