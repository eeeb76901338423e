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
// Frame-level feature extraction. EMG frames carry 6 time-domain features per
// channel (low/high-frequency decomposition) followed by 65 STFT magnitude
// bins per channel; audio maps to an 80-band band-limited log-mel
// spectrogram. Both run at 62.5 frames per second so they index one another.

#ifndef SEMG2V_FEATURES_HPP_
#define SEMG2V_FEATURES_HPP_

#include <Eigen/Dense>
#include <string>

#include "semg2v/io.hpp"

namespace semg2v::feat {

inline constexpr int kEmgWindow = 128;  // 64 ms at 2000 Hz
inline constexpr int kEmgHop = 32;      // 16 ms
inline constexpr int kAudioSampleRate = 16000;
inline constexpr int kAudioWindow = 1024;  // 64 ms at 16 kHz
inline constexpr int kAudioHop = 256;      // 16 ms
inline constexpr int kTdPerChannel = 6;
inline constexpr int kStftPerChannel = kEmgWindow / 2 + 1;  // 65
inline constexpr int kEmgChannels = 5;
inline constexpr int kFeatureDim =
    kEmgChannels * (kTdPerChannel + kStftPerChannel);  // 355
inline constexpr int kMelBands = 80;
inline constexpr double kMelFmin = 80.0;
inline constexpr double kMelFmax = 7600.0;
inline constexpr double kFrameRate = 62.5;
inline constexpr double kLogFloor = 1e-10;

enum class Mode { kSilent, kVocal };

std::string mode_name(Mode mode);
Mode mode_from_name(const std::string& name);

struct FeatureSequence {
  Eigen::MatrixXd frames;  // T x 355
  double frame_rate = kFrameRate;
  Mode mode = Mode::kSilent;
};

struct MelSpectrogram {
  Eigen::MatrixXd frames;  // T x 80
  double frame_rate = kFrameRate;
};

// Low-frequency component of the two-stage 9-point moving-average
// decomposition (count-normalized at the edges, so constants pass through).
Eigen::VectorXd double_average(const Eigen::VectorXd& x, int span = 9);

// Six per-frame time-domain features of one channel: with w the smoothed
// signal, p = x - w and r = |p|, the columns are
// {mean(w), power(w), power(p), zcr(p), mean(r), power(r)} where power is the
// mean square and zcr counts sign changes over the window length.
Eigen::MatrixXd td_features(const Eigen::VectorXd& channel, int window,
                            int hop);

// T x 355 features of a conditioned recording, z-normalized per dimension
// over the utterance (zero-variance dimensions are left at zero).
FeatureSequence emg_features(const io::EmgData& rec, Mode mode);

// Mel filterbank as a (bins x bands) matrix of triangular weights.
Eigen::MatrixXd mel_filterbank(int bands, int nfft, double sample_rate,
                               double fmin, double fmax);

double hz_to_mel(double hz);
double mel_to_hz(double mel);

MelSpectrogram mel_spectrogram(const Eigen::VectorXd& audio, int sample_rate);

struct SyncReport {
  Eigen::Index emg_frames = 0;
  Eigen::Index mel_frames = 0;
  Eigen::Index delta = 0;
  bool flagged = false;  // true when the pair should be rejected
};

// |T_emg - T_mel| with a flag when it exceeds `max_delta`.
SyncReport check_sync(const FeatureSequence& f, const MelSpectrogram& m,
                      Eigen::Index max_delta = 2);

// Truncates both sequences to the shorter length. Throws if flagged.
void truncate_pair(FeatureSequence& f, MelSpectrogram& m,
                   Eigen::Index max_delta = 2);

}  // namespace semg2v::feat

#endif  // SEMG2V_FEATURES_HPP_
