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

#ifndef SEMG2V_STFT_HPP_
#define SEMG2V_STFT_HPP_

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace semg2v::stft {

using ComplexMatrix =
    Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic>;

// Periodic Hann window.
Eigen::VectorXd hann_window(int length);

// Frame count for fully-interior windows: 1 + floor((len - window)/hop).
// Throws if the signal is shorter than one window.
Eigen::Index frame_count(Eigen::Index length, int window, int hop);

// Start offsets of each frame (same contract as frame_count).
std::vector<Eigen::Index> frame_starts(Eigen::Index length, int window,
                                       int hop);

// Magnitude/phase STFT with a periodic Hann window; frames lie fully inside
// the signal (no centering). Returns T x (nfft/2 + 1) half spectra.
ComplexMatrix forward(const Eigen::VectorXd& x, int window, int hop, int nfft);

// Overlap-add inverse with squared-window normalization. `length` selects the
// output sample count ((frames-1)*hop + window by default when length < 0).
Eigen::VectorXd inverse(const ComplexMatrix& spectra, int window, int hop,
                        int nfft, Eigen::Index length = -1);

}  // namespace semg2v::stft

#endif  // SEMG2V_STFT_HPP_
