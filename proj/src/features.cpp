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

#include "semg2v/features.hpp"

#include <cmath>

#include "semg2v/common.hpp"
#include "semg2v/dsp.hpp"
#include "semg2v/stft.hpp"

namespace semg2v::feat {

std::string mode_name(Mode mode) {
  return mode == Mode::kSilent ? "silent" : "vocal";
}

Mode mode_from_name(const std::string& name) {
  if (name == "silent") return Mode::kSilent;
  if (name == "vocal") return Mode::kVocal;
  fail("unknown feature mode: " + name);
}

namespace {

// Centered moving average, normalized by the number of in-range taps.
Eigen::VectorXd moving_average(const Eigen::VectorXd& x, int span) {
  const int half = span / 2;
  Eigen::VectorXd out(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const Eigen::Index lo = std::max<Eigen::Index>(0, i - half);
    const Eigen::Index hi = std::min<Eigen::Index>(x.size() - 1, i + half);
    out[i] = x.segment(lo, hi - lo + 1).mean();
  }
  return out;
}

}  // namespace

Eigen::VectorXd double_average(const Eigen::VectorXd& x, int span) {
  check_arg(span > 0 && span % 2 == 1, "averaging span must be odd");
  return moving_average(moving_average(x, span), span);
}

Eigen::MatrixXd td_features(const Eigen::VectorXd& channel, int window,
                            int hop) {
  const Eigen::VectorXd w = double_average(channel);
  const Eigen::VectorXd p = channel - w;
  const Eigen::VectorXd r = p.cwiseAbs();

  const auto starts = stft::frame_starts(channel.size(), window, hop);
  Eigen::MatrixXd out(static_cast<Eigen::Index>(starts.size()), kTdPerChannel);
  for (std::size_t t = 0; t < starts.size(); ++t) {
    const Eigen::Index s = starts[t];
    const auto wf = w.segment(s, window);
    const auto pf = p.segment(s, window);
    const auto rf = r.segment(s, window);
    int crossings = 0;
    for (int n = 1; n < window; ++n)
      if ((pf[n - 1] >= 0.0) != (pf[n] >= 0.0)) ++crossings;
    const Eigen::Index row = static_cast<Eigen::Index>(t);
    out(row, 0) = wf.mean();
    out(row, 1) = wf.squaredNorm() / window;
    out(row, 2) = pf.squaredNorm() / window;
    out(row, 3) = static_cast<double>(crossings) / window;
    out(row, 4) = rf.mean();
    out(row, 5) = rf.squaredNorm() / window;
  }
  return out;
}

FeatureSequence emg_features(const io::EmgData& rec, Mode mode) {
  dsp::validate_recording(rec);
  const Eigen::Index channels = rec.samples.cols();
  check_arg(channels == kEmgChannels, "expected 5 EMG channels");
  const Eigen::Index frames =
      stft::frame_count(rec.samples.rows(), kEmgWindow, kEmgHop);

  Eigen::MatrixXd feats(frames, kFeatureDim);
  // Time-domain block first (channel-major), then STFT magnitudes.
  for (Eigen::Index c = 0; c < channels; ++c) {
    feats.middleCols(c * kTdPerChannel, kTdPerChannel) =
        td_features(rec.samples.col(c), kEmgWindow, kEmgHop);
  }
  const Eigen::Index stft_base = channels * kTdPerChannel;
  for (Eigen::Index c = 0; c < channels; ++c) {
    const stft::ComplexMatrix spec =
        stft::forward(rec.samples.col(c), kEmgWindow, kEmgHop, kEmgWindow);
    feats.middleCols(stft_base + c * kStftPerChannel, kStftPerChannel) =
        spec.cwiseAbs();
  }

  // Per-utterance z-normalization; zero-variance dimensions stay at zero.
  for (Eigen::Index d = 0; d < feats.cols(); ++d) {
    const double mean = feats.col(d).mean();
    const double var =
        (feats.col(d).array() - mean).square().sum() / feats.rows();
    if (var < 1e-24) {
      feats.col(d).setZero();
    } else {
      feats.col(d) = (feats.col(d).array() - mean) / std::sqrt(var);
    }
  }
  check_state(feats.allFinite(), "non-finite EMG features");
  return FeatureSequence{std::move(feats), kFrameRate, mode};
}

double hz_to_mel(double hz) { return 2595.0 * std::log10(1.0 + hz / 700.0); }

double mel_to_hz(double mel) {
  return 700.0 * (std::pow(10.0, mel / 2595.0) - 1.0);
}

Eigen::MatrixXd mel_filterbank(int bands, int nfft, double sample_rate,
                               double fmin, double fmax) {
  check_arg(bands > 0 && fmin >= 0.0 && fmin < fmax &&
                fmax <= sample_rate / 2.0,
            "invalid mel filterbank parameters");
  const Eigen::Index bins = nfft / 2 + 1;
  const double mel_lo = hz_to_mel(fmin);
  const double mel_hi = hz_to_mel(fmax);
  Eigen::VectorXd corners(bands + 2);
  for (int i = 0; i < bands + 2; ++i)
    corners[i] = mel_to_hz(mel_lo + (mel_hi - mel_lo) * i / (bands + 1));

  Eigen::MatrixXd fb = Eigen::MatrixXd::Zero(bins, bands);
  for (Eigen::Index k = 0; k < bins; ++k) {
    const double f = k * sample_rate / nfft;
    for (int b = 0; b < bands; ++b) {
      const double left = corners[b], center = corners[b + 1],
                   right = corners[b + 2];
      if (f <= left || f >= right) continue;
      fb(k, b) = f <= center ? (f - left) / (center - left)
                             : (right - f) / (right - center);
    }
  }
  return fb;
}

MelSpectrogram mel_spectrogram(const Eigen::VectorXd& audio, int sample_rate) {
  check_arg(sample_rate == kAudioSampleRate, "audio must be 16 kHz");
  check_arg(audio.allFinite(), "audio contains non-finite samples");
  check_arg(audio.size() >= kAudioWindow,
            "audio shorter than one analysis window");

  const stft::ComplexMatrix spec =
      stft::forward(audio, kAudioWindow, kAudioHop, kAudioWindow);
  static const Eigen::MatrixXd fb = mel_filterbank(
      kMelBands, kAudioWindow, kAudioSampleRate, kMelFmin, kMelFmax);
  Eigen::MatrixXd mel = (spec.cwiseAbs() * fb)
                            .cwiseMax(kLogFloor)
                            .array()
                            .log()
                            .matrix();
  return MelSpectrogram{std::move(mel), kFrameRate};
}

SyncReport check_sync(const FeatureSequence& f, const MelSpectrogram& m,
                      Eigen::Index max_delta) {
  SyncReport report;
  report.emg_frames = f.frames.rows();
  report.mel_frames = m.frames.rows();
  report.delta = std::abs(report.emg_frames - report.mel_frames);
  report.flagged = report.delta > max_delta;
  return report;
}

void truncate_pair(FeatureSequence& f, MelSpectrogram& m,
                   Eigen::Index max_delta) {
  const SyncReport report = check_sync(f, m, max_delta);
  check_state(!report.flagged,
              "EMG/mel frame counts differ by " + std::to_string(report.delta) +
                  " frames; pair flagged");
  const Eigen::Index keep = std::min(report.emg_frames, report.mel_frames);
  f.frames.conservativeResize(keep, Eigen::NoChange);
  m.frames.conservativeResize(keep, Eigen::NoChange);
}

}  // namespace semg2v::feat
