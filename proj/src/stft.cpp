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

#include "semg2v/stft.hpp"

#include <unsupported/Eigen/FFT>

#include <cmath>

#include "semg2v/common.hpp"

namespace semg2v::stft {

Eigen::VectorXd hann_window(int length) {
  check_arg(length > 0, "window length must be positive");
  Eigen::VectorXd w(length);
  for (int n = 0; n < length; ++n)
    w[n] = 0.5 - 0.5 * std::cos(2.0 * M_PI * n / length);
  return w;
}

Eigen::Index frame_count(Eigen::Index length, int window, int hop) {
  check_arg(window > 0 && hop > 0, "window and hop must be positive");
  check_arg(length >= window, "signal shorter than one analysis window");
  return 1 + (length - window) / hop;
}

std::vector<Eigen::Index> frame_starts(Eigen::Index length, int window,
                                       int hop) {
  const Eigen::Index n = frame_count(length, window, hop);
  std::vector<Eigen::Index> starts(static_cast<std::size_t>(n));
  for (Eigen::Index t = 0; t < n; ++t)
    starts[static_cast<std::size_t>(t)] = t * hop;
  return starts;
}

ComplexMatrix forward(const Eigen::VectorXd& x, int window, int hop,
                      int nfft) {
  check_arg(nfft >= window, "nfft must be >= window length");
  const Eigen::Index frames = frame_count(x.size(), window, hop);
  const Eigen::Index bins = nfft / 2 + 1;
  const Eigen::VectorXd win = hann_window(window);

  Eigen::FFT<double> fft;
  std::vector<double> buf(static_cast<std::size_t>(nfft));
  std::vector<std::complex<double>> spec;
  ComplexMatrix out(frames, bins);
  for (Eigen::Index t = 0; t < frames; ++t) {
    const Eigen::Index start = t * hop;
    for (int n = 0; n < window; ++n)
      buf[static_cast<std::size_t>(n)] = x[start + n] * win[n];
    for (int n = window; n < nfft; ++n) buf[static_cast<std::size_t>(n)] = 0.0;
    fft.fwd(spec, buf);
    for (Eigen::Index k = 0; k < bins; ++k)
      out(t, k) = spec[static_cast<std::size_t>(k)];
  }
  return out;
}

Eigen::VectorXd inverse(const ComplexMatrix& spectra, int window, int hop,
                        int nfft, Eigen::Index length) {
  check_arg(spectra.cols() == nfft / 2 + 1,
            "spectrum width does not match nfft");
  const Eigen::Index frames = spectra.rows();
  check_arg(frames > 0, "cannot invert an empty spectrogram");
  const Eigen::Index full = (frames - 1) * hop + window;
  if (length < 0) length = full;

  const Eigen::VectorXd win = hann_window(window);
  Eigen::VectorXd acc = Eigen::VectorXd::Zero(full);
  Eigen::VectorXd norm = Eigen::VectorXd::Zero(full);

  Eigen::FFT<double> fft;
  std::vector<std::complex<double>> spec(static_cast<std::size_t>(nfft));
  std::vector<double> buf;
  for (Eigen::Index t = 0; t < frames; ++t) {
    for (Eigen::Index k = 0; k <= nfft / 2; ++k)
      spec[static_cast<std::size_t>(k)] = spectra(t, k);
    for (Eigen::Index k = nfft / 2 + 1; k < nfft; ++k)
      spec[static_cast<std::size_t>(k)] = std::conj(spectra(t, nfft - k));
    fft.inv(buf, spec);
    const Eigen::Index start = t * hop;
    for (int n = 0; n < window; ++n) {
      acc[start + n] += buf[static_cast<std::size_t>(n)] * win[n];
      norm[start + n] += win[n] * win[n];
    }
  }
  for (Eigen::Index i = 0; i < full; ++i)
    if (norm[i] > 1e-12) acc[i] /= norm[i];

  Eigen::VectorXd out = Eigen::VectorXd::Zero(length);
  out.head(std::min(length, full)) = acc.head(std::min(length, full));
  return out;
}

}  // namespace semg2v::stft
