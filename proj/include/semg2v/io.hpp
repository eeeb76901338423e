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

#ifndef SEMG2V_IO_HPP_
#define SEMG2V_IO_HPP_

#include <Eigen/Dense>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace semg2v::io {

using Json = nlohmann::json;

// ---- audio -----------------------------------------------------------------

struct WavData {
  Eigen::VectorXd samples;  // mono
  int sample_rate = 0;
};

// Accepts PCM16 and IEEE float32 mono/multichannel (channels are averaged
// down to mono on read).
WavData read_wav(const std::string& path);

// Writes IEEE float32 mono.
void write_wav(const std::string& path, const Eigen::VectorXd& samples,
               int sample_rate);

// ---- EMG container ----------------------------------------------------------
// Raw little-endian float32 PCM, sample-major / channel-interleaved, with a
// JSON sidecar "<path>.json" holding {sample_rate, channels} plus optional
// provenance.

struct EmgData {
  Eigen::MatrixXd samples;  // length x channels
  int sample_rate = 0;
};

EmgData read_emg(const std::string& path);
void write_emg(const std::string& path, const EmgData& emg,
               const Json& provenance = Json::object());

// ---- raw-matrix container ----------------------------------------------------
// One binary format shared by feature, mel and predicted-feature files:
// magic "SGMX", u32 json header length, JSON header
// {rows, cols, frame_rate, mode, ...}, then rows*cols float32, row-major.

struct MatrixHeader {
  std::int64_t rows = 0;
  std::int64_t cols = 0;
  double frame_rate = 0.0;
  std::string mode;  // "silent" | "vocal" | "" for non-feature matrices
  Json extra = Json::object();
};

void write_matrix(const std::string& path, const Eigen::MatrixXd& m,
                  const MatrixHeader& header);
Eigen::MatrixXd read_matrix(const std::string& path,
                            MatrixHeader* header = nullptr);

// ---- durations ---------------------------------------------------------------
// Text lines "id: d1 d2 ... dN", kept in file order.

using DurationTable = std::vector<std::pair<std::string, std::vector<int>>>;

void write_durations(const std::string& path, const DurationTable& table);
DurationTable read_durations(const std::string& path);

// ---- transcripts -------------------------------------------------------------
// UTF-8 lines "id<TAB>pinyin syllables<TAB>characters".

struct TranscriptEntry {
  std::string id;
  std::string syllables;   // space-separated toned pinyin
  std::string characters;  // reference character string for CER
};

std::vector<TranscriptEntry> read_transcripts(const std::string& path);
void write_transcripts(const std::string& path,
                       const std::vector<TranscriptEntry>& entries);

// ---- tensor archive ----------------------------------------------------------
// Checkpoint container: magic "SGCK", u32 JSON metadata length, metadata,
// then per tensor: u32 name length, name bytes, u32 rows, u32 cols,
// rows*cols float64 little-endian. Tensor count lives in the metadata.

using NamedMatrix = std::pair<std::string, Eigen::MatrixXd>;

void write_tensor_archive(const std::string& path,
                          const std::vector<NamedMatrix>& tensors,
                          const Json& meta);
std::vector<NamedMatrix> read_tensor_archive(const std::string& path,
                                             Json* meta = nullptr);

// ---- small file helpers --------------------------------------------------------

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);
bool file_exists(const std::string& path);

}  // namespace semg2v::io

#endif  // SEMG2V_IO_HPP_
