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
// Mandarin toneme inventory: pinyin syllables split into onset / toned
// nucleus / coda ("teng2" -> t, e2, ng), a label set built over a lexicon,
// Praat TextGrid ingestion and frame-level rasterization of phone intervals.

#ifndef SEMG2V_TONEME_HPP_
#define SEMG2V_TONEME_HPP_

#include <string>
#include <unordered_map>
#include <vector>

namespace semg2v::toneme {

inline constexpr const char* kSilenceLabel = "sil";

// Splits a toned pinyin syllable into tonemes: optional onset consonant
// cluster, the maximal vowel run carrying the tone digit, optional coda.
// "er" is kept as a digraph nucleus. Throws on a missing vowel or a tone
// digit outside 1-5.
std::vector<std::string> split_syllable(const std::string& pinyin_with_tone);

struct TonemeSet {
  std::vector<std::string> labels;  // labels[0] == "sil"
  std::unordered_map<std::string, int> index;

  int size() const { return static_cast<int>(labels.size()); }
  int id_of(const std::string& label) const;
  bool contains(const std::string& label) const {
    return index.count(label) > 0;
  }
};

// Union of split_syllable over the lexicon, sorted, silence prepended.
TonemeSet build_inventory(const std::vector<std::string>& lexicon);

// The standard toneless syllable table used for the canonical label set.
const std::vector<std::string>& canonical_syllable_table();

// Inventory over the full syllable table with all five tones.
const TonemeSet& canonical_inventory();

// Tone digit of a label (1-5), or 0 for consonants and silence.
int tone_of_label(const std::string& label);

// Label with its tone digit removed ("e2" -> "e", "ng" -> "ng").
std::string strip_tone(const std::string& label);

void save_inventory(const std::string& path, const TonemeSet& set);
TonemeSet load_inventory(const std::string& path);

// ---- forced-alignment intervals -------------------------------------------------

struct Interval {
  double xmin = 0.0;
  double xmax = 0.0;
  std::string label;
};

struct AlignmentIntervals {
  std::vector<Interval> intervals;
  double total_duration = 0.0;
};

// Parses a Praat TextGrid (long or short text form) and extracts the
// interval tier named "phones" (or the only interval tier when no tier has
// that name). Whitespace-tolerant; throws on malformed headers, truncated
// intervals or non-monotonic times.
AlignmentIntervals parse_textgrid(const std::string& text);

// Long-form TextGrid text with a single "phones" tier.
std::string format_textgrid(const AlignmentIntervals& intervals);

// Frame-level labels at 62.5 Hz: frame j (1-based) takes the label covering
// its center (j - 0.5)/62.5 s; uncovered frames are silence. Unknown labels
// throw. `frames` must be consistent with the total duration; the check
// allows the analysis-window edge loss plus two frames of slack.
std::vector<int> rasterize(const AlignmentIntervals& intervals, int frames,
                           const TonemeSet& set);

}  // namespace semg2v::toneme

#endif  // SEMG2V_TONEME_HPP_
