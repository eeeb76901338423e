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

#include "semg2v/io.hpp"

#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "semg2v/common.hpp"

namespace semg2v::io {
namespace {

// All container formats are defined little-endian; this code assumes a
// little-endian host.
static_assert(std::endian::native == std::endian::little,
              "container formats are little-endian");

void write_u32(std::ostream& os, std::uint32_t v) {
  os.write(reinterpret_cast<const char*>(&v), 4);
}

std::uint32_t read_u32(std::istream& is) {
  std::uint32_t v = 0;
  is.read(reinterpret_cast<char*>(&v), 4);
  check_state(bool(is), "unexpected end of file while reading u32");
  return v;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  check_state(bool(os), "cannot open for writing: " + path);
  return os;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  check_state(bool(is), "cannot open for reading: " + path);
  return is;
}

}  // namespace

// ---- WAV ----------------------------------------------------------------------

WavData read_wav(const std::string& path) {
  std::ifstream is = open_in(path);
  char riff[4], wave[4];
  std::uint32_t riff_size = 0;
  is.read(riff, 4);
  riff_size = read_u32(is);
  (void)riff_size;
  is.read(wave, 4);
  check_state(is && std::memcmp(riff, "RIFF", 4) == 0 &&
                  std::memcmp(wave, "WAVE", 4) == 0,
              "not a RIFF/WAVE file: " + path);

  std::uint16_t format = 0, channels = 0, bits = 0;
  std::uint32_t sample_rate = 0;
  std::vector<char> data;
  bool have_fmt = false, have_data = false;
  while (is && !(have_fmt && have_data)) {
    char id[4];
    is.read(id, 4);
    if (!is) break;
    std::uint32_t size = read_u32(is);
    if (std::memcmp(id, "fmt ", 4) == 0) {
      std::vector<char> fmt(size);
      is.read(fmt.data(), size);
      check_state(bool(is) && size >= 16, "truncated fmt chunk: " + path);
      std::memcpy(&format, fmt.data() + 0, 2);
      std::memcpy(&channels, fmt.data() + 2, 2);
      std::memcpy(&sample_rate, fmt.data() + 4, 4);
      std::memcpy(&bits, fmt.data() + 14, 2);
      have_fmt = true;
    } else if (std::memcmp(id, "data", 4) == 0) {
      data.resize(size);
      is.read(data.data(), size);
      check_state(bool(is), "truncated data chunk: " + path);
      have_data = true;
    } else {
      is.seekg(size + (size & 1), std::ios::cur);
    }
  }
  check_state(have_fmt && have_data, "missing fmt/data chunk: " + path);
  check_state(channels >= 1, "zero channels: " + path);

  Eigen::VectorXd mono;
  if (format == 1 && bits == 16) {
    const std::size_t n = data.size() / 2 / channels;
    mono.resize(static_cast<Eigen::Index>(n));
    const std::int16_t* p = reinterpret_cast<const std::int16_t*>(data.data());
    for (std::size_t i = 0; i < n; ++i) {
      double acc = 0.0;
      for (int c = 0; c < channels; ++c) acc += p[i * channels + c];
      mono[static_cast<Eigen::Index>(i)] = acc / channels / 32768.0;
    }
  } else if (format == 3 && bits == 32) {
    const std::size_t n = data.size() / 4 / channels;
    mono.resize(static_cast<Eigen::Index>(n));
    const float* p = reinterpret_cast<const float*>(data.data());
    for (std::size_t i = 0; i < n; ++i) {
      double acc = 0.0;
      for (int c = 0; c < channels; ++c) acc += p[i * channels + c];
      mono[static_cast<Eigen::Index>(i)] = acc / channels;
    }
  } else {
    fail("unsupported WAV encoding (want PCM16 or float32): " + path);
  }
  return WavData{std::move(mono), static_cast<int>(sample_rate)};
}

void write_wav(const std::string& path, const Eigen::VectorXd& samples,
               int sample_rate) {
  check_arg(sample_rate > 0, "write_wav: sample_rate must be positive");
  std::ofstream os = open_out(path);
  const std::uint32_t n = static_cast<std::uint32_t>(samples.size());
  const std::uint32_t data_bytes = n * 4;
  os.write("RIFF", 4);
  write_u32(os, 36 + data_bytes);
  os.write("WAVE", 4);
  os.write("fmt ", 4);
  write_u32(os, 16);
  const std::uint16_t format = 3, channels = 1, bits = 32;
  os.write(reinterpret_cast<const char*>(&format), 2);
  os.write(reinterpret_cast<const char*>(&channels), 2);
  write_u32(os, static_cast<std::uint32_t>(sample_rate));
  write_u32(os, static_cast<std::uint32_t>(sample_rate) * 4);
  const std::uint16_t block_align = 4;
  os.write(reinterpret_cast<const char*>(&block_align), 2);
  os.write(reinterpret_cast<const char*>(&bits), 2);
  os.write("data", 4);
  write_u32(os, data_bytes);
  for (Eigen::Index i = 0; i < samples.size(); ++i) {
    const float v = static_cast<float>(samples[i]);
    os.write(reinterpret_cast<const char*>(&v), 4);
  }
  check_state(bool(os), "short write: " + path);
}

// ---- EMG container --------------------------------------------------------------

EmgData read_emg(const std::string& path) {
  const Json header = Json::parse(read_text_file(path + ".json"));
  const int sample_rate = header.at("sample_rate").get<int>();
  const int channels = header.at("channels").get<int>();
  check_state(channels >= 1, "bad channel count in sidecar: " + path);

  std::ifstream is = open_in(path);
  is.seekg(0, std::ios::end);
  const std::streamoff bytes = is.tellg();
  is.seekg(0, std::ios::beg);
  check_state(bytes % (4 * channels) == 0,
              "EMG payload not a whole number of frames: " + path);
  const Eigen::Index length = bytes / (4 * channels);

  std::vector<float> raw(static_cast<std::size_t>(bytes / 4));
  is.read(reinterpret_cast<char*>(raw.data()), bytes);
  check_state(bool(is), "truncated EMG payload: " + path);

  Eigen::MatrixXd samples(length, channels);
  for (Eigen::Index t = 0; t < length; ++t)
    for (int c = 0; c < channels; ++c)
      samples(t, c) = raw[static_cast<std::size_t>(t) * channels + c];
  return EmgData{std::move(samples), sample_rate};
}

void write_emg(const std::string& path, const EmgData& emg,
               const Json& provenance) {
  Json header;
  header["sample_rate"] = emg.sample_rate;
  header["channels"] = static_cast<int>(emg.samples.cols());
  if (!provenance.empty()) header["provenance"] = provenance;
  write_text_file(path + ".json", header.dump(2) + "\n");

  std::ofstream os = open_out(path);
  for (Eigen::Index t = 0; t < emg.samples.rows(); ++t)
    for (Eigen::Index c = 0; c < emg.samples.cols(); ++c) {
      const float v = static_cast<float>(emg.samples(t, c));
      os.write(reinterpret_cast<const char*>(&v), 4);
    }
  check_state(bool(os), "short write: " + path);
}

// ---- raw-matrix container ---------------------------------------------------------

void write_matrix(const std::string& path, const Eigen::MatrixXd& m,
                  const MatrixHeader& header) {
  Json j = header.extra;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["frame_rate"] = header.frame_rate;
  j["mode"] = header.mode;
  const std::string js = j.dump();

  std::ofstream os = open_out(path);
  os.write("SGMX", 4);
  write_u32(os, static_cast<std::uint32_t>(js.size()));
  os.write(js.data(), static_cast<std::streamsize>(js.size()));
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      const float v = static_cast<float>(m(r, c));
      os.write(reinterpret_cast<const char*>(&v), 4);
    }
  check_state(bool(os), "short write: " + path);
}

Eigen::MatrixXd read_matrix(const std::string& path, MatrixHeader* header) {
  std::ifstream is = open_in(path);
  char magic[4];
  is.read(magic, 4);
  check_state(is && std::memcmp(magic, "SGMX", 4) == 0,
              "not a matrix container: " + path);
  const std::uint32_t jlen = read_u32(is);
  std::string js(jlen, '\0');
  is.read(js.data(), jlen);
  check_state(bool(is), "truncated matrix header: " + path);
  const Json j = Json::parse(js);
  const Eigen::Index rows = j.at("rows").get<Eigen::Index>();
  const Eigen::Index cols = j.at("cols").get<Eigen::Index>();
  if (header != nullptr) {
    header->rows = rows;
    header->cols = cols;
    header->frame_rate = j.at("frame_rate").get<double>();
    header->mode = j.at("mode").get<std::string>();
    header->extra = j;
  }
  std::vector<float> raw(static_cast<std::size_t>(rows) * cols);
  is.read(reinterpret_cast<char*>(raw.data()),
          static_cast<std::streamsize>(raw.size() * 4));
  check_state(bool(is), "truncated matrix payload: " + path);
  Eigen::MatrixXd m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r)
    for (Eigen::Index c = 0; c < cols; ++c)
      m(r, c) = raw[static_cast<std::size_t>(r) * cols + c];
  return m;
}

// ---- durations -----------------------------------------------------------------

void write_durations(const std::string& path, const DurationTable& table) {
  std::ostringstream os;
  for (const auto& [id, d] : table) {
    os << id << ":";
    for (int v : d) os << " " << v;
    os << "\n";
  }
  write_text_file(path, os.str());
}

DurationTable read_durations(const std::string& path) {
  DurationTable table;
  std::istringstream is(read_text_file(path));
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const std::size_t colon = line.find(':');
    check_state(colon != std::string::npos,
                "malformed duration line in " + path + ": " + line);
    std::istringstream values(line.substr(colon + 1));
    std::vector<int> d;
    int v = 0;
    while (values >> v) {
      check_state(v >= 0, "negative duration in " + path);
      d.push_back(v);
    }
    table.emplace_back(line.substr(0, colon), std::move(d));
  }
  return table;
}

// ---- transcripts ----------------------------------------------------------------

std::vector<TranscriptEntry> read_transcripts(const std::string& path) {
  std::vector<TranscriptEntry> entries;
  std::istringstream is(read_text_file(path));
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const std::size_t t1 = line.find('\t');
    const std::size_t t2 = t1 == std::string::npos ? t1 : line.find('\t', t1 + 1);
    check_state(t1 != std::string::npos && t2 != std::string::npos,
                "malformed transcript line in " + path + ": " + line);
    entries.push_back(TranscriptEntry{line.substr(0, t1),
                                      line.substr(t1 + 1, t2 - t1 - 1),
                                      line.substr(t2 + 1)});
  }
  return entries;
}

void write_transcripts(const std::string& path,
                       const std::vector<TranscriptEntry>& entries) {
  std::ostringstream os;
  for (const auto& e : entries)
    os << e.id << "\t" << e.syllables << "\t" << e.characters << "\n";
  write_text_file(path, os.str());
}

// ---- tensor archive ---------------------------------------------------------------

void write_tensor_archive(const std::string& path,
                          const std::vector<NamedMatrix>& tensors,
                          const Json& meta) {
  Json j = meta;
  j["tensor_count"] = tensors.size();
  const std::string js = j.dump();

  std::ofstream os = open_out(path);
  os.write("SGCK", 4);
  write_u32(os, static_cast<std::uint32_t>(js.size()));
  os.write(js.data(), static_cast<std::streamsize>(js.size()));
  for (const auto& [name, m] : tensors) {
    write_u32(os, static_cast<std::uint32_t>(name.size()));
    os.write(name.data(), static_cast<std::streamsize>(name.size()));
    write_u32(os, static_cast<std::uint32_t>(m.rows()));
    write_u32(os, static_cast<std::uint32_t>(m.cols()));
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      for (Eigen::Index c = 0; c < m.cols(); ++c) {
        const double v = m(r, c);
        os.write(reinterpret_cast<const char*>(&v), 8);
      }
  }
  check_state(bool(os), "short write: " + path);
}

std::vector<NamedMatrix> read_tensor_archive(const std::string& path,
                                             Json* meta) {
  std::ifstream is = open_in(path);
  char magic[4];
  is.read(magic, 4);
  check_state(is && std::memcmp(magic, "SGCK", 4) == 0,
              "not a tensor archive: " + path);
  const std::uint32_t jlen = read_u32(is);
  std::string js(jlen, '\0');
  is.read(js.data(), jlen);
  check_state(bool(is), "truncated archive metadata: " + path);
  const Json j = Json::parse(js);
  if (meta != nullptr) *meta = j;
  const std::size_t count = j.at("tensor_count").get<std::size_t>();

  std::vector<NamedMatrix> tensors;
  tensors.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint32_t name_len = read_u32(is);
    std::string name(name_len, '\0');
    is.read(name.data(), name_len);
    const Eigen::Index rows = read_u32(is);
    const Eigen::Index cols = read_u32(is);
    Eigen::MatrixXd m(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r)
      for (Eigen::Index c = 0; c < cols; ++c) {
        double v = 0.0;
        is.read(reinterpret_cast<char*>(&v), 8);
        m(r, c) = v;
      }
    check_state(bool(is), "truncated tensor payload: " + path);
    tensors.emplace_back(std::move(name), std::move(m));
  }
  return tensors;
}

// ---- small file helpers --------------------------------------------------------------

std::string read_text_file(const std::string& path) {
  std::ifstream is = open_in(path);
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream os = open_out(path);
  os.write(content.data(), static_cast<std::streamsize>(content.size()));
  check_state(bool(os), "short write: " + path);
}

bool file_exists(const std::string& path) {
  return std::filesystem::exists(path);
}

}  // namespace semg2v::io
