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

#include "semg2v/dsp.hpp"

#include <cmath>

#include "semg2v/common.hpp"

namespace semg2v::dsp {
namespace {

constexpr double kPi = 3.14159265358979323846;

using Complex = std::complex<double>;

// Digital pole/zero pair -> denominator coefficients of one section.
Biquad section_from_conjugate_pole(const Complex& pole) {
  Biquad s;
  s.b0 = 1.0;
  s.b1 = 0.0;
  s.b2 = -1.0;  // one zero at z=+1, one at z=-1
  s.a1 = -2.0 * pole.real();
  s.a2 = std::norm(pole);
  return s;
}

Biquad section_from_real_poles(double p1, double p2) {
  Biquad s;
  s.b0 = 1.0;
  s.b1 = 0.0;
  s.b2 = -1.0;
  s.a1 = -(p1 + p2);
  s.a2 = p1 * p2;
  return s;
}

Complex bilinear(const Complex& s) { return (1.0 + s) / (1.0 - s); }

// Steady-state internal state of a DF2T section for constant input x0 = 1.
// Scaled by the actual first sample before each pass; this removes the
// start-up transient for the step component of the signal.
void steady_state_zi(const Biquad& s, double& z1, double& z2) {
  const double den = 1.0 + s.a1 + s.a2;
  const double h1 = std::abs(den) > 1e-300 ? (s.b0 + s.b1 + s.b2) / den : 0.0;
  z2 = s.b2 - s.a2 * h1;
  z1 = s.b1 - s.a1 * h1 + z2;
}

Eigen::VectorXd run_sections(const SosFilter& filter, Eigen::VectorXd x) {
  for (const Biquad& s : filter.sections) {
    double z1 = 0.0, z2 = 0.0;
    steady_state_zi(s, z1, z2);
    z1 *= x[0];
    z2 *= x[0];
    for (Eigen::Index n = 0; n < x.size(); ++n) {
      const double in = x[n];
      const double out = s.b0 * in + z1;
      z1 = s.b1 * in - s.a1 * out + z2;
      z2 = s.b2 * in - s.a2 * out;
      x[n] = out;
    }
  }
  return x;
}

}  // namespace

SosFilter design_butterworth_bandpass(int order, double low_hz, double high_hz,
                                      double sample_rate) {
  check_arg(order >= 2 && order % 2 == 0,
            "bandpass order must be a positive even pole count");
  check_arg(low_hz > 0.0 && low_hz < high_hz && high_hz < sample_rate / 2.0,
            "invalid band edges: need 0 < low < high < Nyquist");

  const int n = order / 2;  // lowpass prototype order
  const double w1 = std::tan(kPi * low_hz / sample_rate);
  const double w2 = std::tan(kPi * high_hz / sample_rate);
  const double bw = w2 - w1;
  const double w0sq = w1 * w2;

  SosFilter filter;
  filter.design_order = order;
  for (int k = 1; k <= n; ++k) {
    const double angle = kPi * (2.0 * k + n - 1.0) / (2.0 * n);
    const Complex proto(std::cos(angle), std::sin(angle));
    if (proto.imag() < 1e-12) continue;  // conjugates handled implicitly

    const Complex c = proto * (bw / 2.0);
    const Complex d = std::sqrt(c * c - w0sq);
    filter.sections.push_back(section_from_conjugate_pole(bilinear(c + d)));
    filter.sections.push_back(section_from_conjugate_pole(bilinear(c - d)));
  }
  if (n % 2 == 1) {  // real prototype pole at s = -1
    const double c = -bw / 2.0;
    const double disc = c * c - w0sq;
    if (disc >= 0.0) {
      const double d = std::sqrt(disc);
      filter.sections.push_back(
          section_from_real_poles(bilinear(Complex(c + d, 0)).real(),
                                  bilinear(Complex(c - d, 0)).real()));
    } else {
      filter.sections.push_back(section_from_conjugate_pole(
          bilinear(Complex(c, std::sqrt(-disc)))));
    }
  }

  // Unity gain at the geometric band center.
  const double center_hz =
      std::atan(std::sqrt(w0sq)) * sample_rate / kPi;
  const double mag = std::abs(sos_response(filter, center_hz, sample_rate));
  check_state(mag > 0.0, "degenerate bandpass design");
  const double per_section =
      std::pow(1.0 / mag, 1.0 / static_cast<double>(filter.sections.size()));
  for (Biquad& s : filter.sections) {
    s.b0 *= per_section;
    s.b1 *= per_section;
    s.b2 *= per_section;
  }
  return filter;
}

Biquad design_notch(double f0_hz, double q, double sample_rate) {
  check_arg(f0_hz > 0.0 && f0_hz < sample_rate / 2.0,
            "notch frequency must lie below Nyquist");
  check_arg(q > 0.0, "notch q must be positive");
  const double w0 = 2.0 * kPi * f0_hz / sample_rate;
  const double alpha = std::sin(w0) / (2.0 * q);
  const double a0 = 1.0 + alpha;
  Biquad s;
  s.b0 = 1.0 / a0;
  s.b1 = -2.0 * std::cos(w0) / a0;
  s.b2 = 1.0 / a0;
  s.a1 = -2.0 * std::cos(w0) / a0;
  s.a2 = (1.0 - alpha) / a0;
  return s;
}

SosFilter design_notch_chain(double base_hz, double max_hz, double q,
                             double sample_rate) {
  check_arg(base_hz > 0.0, "notch base frequency must be positive");
  check_arg(base_hz < sample_rate / 2.0, "notch base frequency >= Nyquist");
  check_arg(max_hz <= sample_rate / 2.0, "notch max frequency above Nyquist");
  SosFilter filter;
  for (double f = base_hz; f <= max_hz && f < sample_rate / 2.0; f += base_hz)
    filter.sections.push_back(design_notch(f, q, sample_rate));
  filter.design_order = 2 * static_cast<int>(filter.sections.size());
  return filter;
}

std::complex<double> sos_response(const SosFilter& filter, double freq_hz,
                                  double sample_rate) {
  const double w = 2.0 * kPi * freq_hz / sample_rate;
  const Complex z1 = std::polar(1.0, -w);
  const Complex z2 = z1 * z1;
  Complex h(1.0, 0.0);
  for (const Biquad& s : filter.sections)
    h *= (s.b0 + s.b1 * z1 + s.b2 * z2) / (1.0 + s.a1 * z1 + s.a2 * z2);
  return h;
}

Eigen::VectorXd sos_filter(const SosFilter& filter, const Eigen::VectorXd& x) {
  check_arg(x.size() > 0, "cannot filter an empty signal");
  return run_sections(filter, x);
}

Eigen::VectorXd filtfilt(const SosFilter& filter, const Eigen::VectorXd& x) {
  check_arg(x.size() > 1, "cannot zero-phase filter a signal this short");
  const Eigen::Index pad =
      std::min<Eigen::Index>(3 * std::max(filter.design_order, 2), x.size() - 1);

  // Odd reflection about the end points.
  Eigen::VectorXd ext(x.size() + 2 * pad);
  for (Eigen::Index i = 0; i < pad; ++i)
    ext[i] = 2.0 * x[0] - x[pad - i];
  ext.segment(pad, x.size()) = x;
  for (Eigen::Index i = 0; i < pad; ++i)
    ext[pad + x.size() + i] = 2.0 * x[x.size() - 1] - x[x.size() - 2 - i];

  ext = run_sections(filter, ext);
  ext.reverseInPlace();
  ext = run_sections(filter, ext);
  ext.reverseInPlace();
  return ext.segment(pad, x.size());
}

void validate_recording(const io::EmgData& rec) {
  check_arg(rec.sample_rate == kEmgSampleRate,
            "EMG sample rate must be 2000 Hz");
  check_arg(rec.samples.rows() >= kEmgMinLength,
            "EMG recording shorter than one frame (128 samples)");
  check_arg(rec.samples.cols() >= 1, "EMG recording has no channels");
  check_arg(rec.samples.allFinite(), "EMG recording contains non-finite samples");
}

io::EmgData bandpass(const io::EmgData& rec, double low_hz, double high_hz) {
  validate_recording(rec);
  check_arg(low_hz > 0.0 && low_hz < high_hz &&
                high_hz < rec.sample_rate / 2.0,
            "invalid band edges: need 0 < low < high < Nyquist");
  const SosFilter filter =
      design_butterworth_bandpass(4, low_hz, high_hz, rec.sample_rate);
  io::EmgData out = rec;
  for (Eigen::Index c = 0; c < rec.samples.cols(); ++c)
    out.samples.col(c) = filtfilt(filter, rec.samples.col(c));
  return out;
}

io::EmgData notch_harmonics(const io::EmgData& rec, double base_hz,
                            double max_hz, double q) {
  validate_recording(rec);
  check_arg(base_hz < rec.sample_rate / 2.0, "notch base frequency >= Nyquist");
  const SosFilter filter =
      design_notch_chain(base_hz, max_hz, q, rec.sample_rate);
  if (filter.sections.empty()) return rec;
  io::EmgData out = rec;
  for (Eigen::Index c = 0; c < rec.samples.cols(); ++c)
    out.samples.col(c) = filtfilt(filter, rec.samples.col(c));
  return out;
}

}  // namespace semg2v::dsp
