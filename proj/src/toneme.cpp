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

#include "semg2v/toneme.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <set>
#include <sstream>

#include "semg2v/common.hpp"
#include "semg2v/io.hpp"

namespace semg2v::toneme {
namespace {

// The standard Mandarin syllable table (toneless, ASCII pinyin with v for
// the umlauted u after n/l).
constexpr const char* kSyllableTable = R"(
a ai an ang ao e ei en eng er o ou
ya yan yang yao ye yi yin ying yo yong you yu yuan yue yun
wa wai wan wang wei wen weng wo wu
ba bai ban bang bao bei ben beng bi bian biao bie bin bing bo bu
pa pai pan pang pao pei pen peng pi pian piao pie pin ping po pou pu
ma mai man mang mao me mei men meng mi mian miao mie min ming miu mo mou mu
fa fan fang fei fen feng fo fou fu
da dai dan dang dao de dei den deng di dia dian diao die ding diu dong dou du duan dui dun duo
ta tai tan tang tao te teng ti tian tiao tie ting tong tou tu tuan tui tun tuo
na nai nan nang nao ne nei nen neng ni nian niang niao nie nin ning niu nong nou nu nuan nuo nv nve
la lai lan lang lao le lei leng li lia lian liang liao lie lin ling liu lo long lou lu luan lun luo lv lve
ga gai gan gang gao ge gei gen geng gong gou gu gua guai guan guang gui gun guo
ka kai kan kang kao ke kei ken keng kong kou ku kua kuai kuan kuang kui kun kuo
ha hai han hang hao he hei hen heng hong hou hu hua huai huan huang hui hun huo
ji jia jian jiang jiao jie jin jing jiong jiu ju juan jue jun
qi qia qian qiang qiao qie qin qing qiong qiu qu quan que qun
xi xia xian xiang xiao xie xin xing xiong xiu xu xuan xue xun
zha zhai zhan zhang zhao zhe zhei zhen zheng zhi zhong zhou zhu zhua zhuai zhuan zhuang zhui zhun zhuo
cha chai chan chang chao che chen cheng chi chong chou chu chua chuai chuan chuang chui chun chuo
sha shai shan shang shao she shei shen sheng shi shou shu shua shuai shuan shuang shui shun shuo
ran rang rao re ren reng ri rong rou ru rua ruan rui run ruo
za zai zan zang zao ze zei zen zeng zi zong zou zu zuan zui zun zuo
ca cai can cang cao ce cen ceng ci cong cou cu cuan cui cun cuo
sa sai san sang sao se sen seng si song sou su suan sui sun suo
)";

// Vowel characters; the two-byte UTF-8 u-umlaut also counts as one vowel.
bool is_ascii_vowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u' || c == 'v';
}

// Returns the byte length of the vowel starting at position i, or 0.
std::size_t vowel_len_at(const std::string& s, std::size_t i) {
  if (is_ascii_vowel(s[i])) return 1;
  if (i + 1 < s.size() && static_cast<unsigned char>(s[i]) == 0xC3 &&
      static_cast<unsigned char>(s[i + 1]) == 0xBC)
    return 2;  // u-umlaut
  return 0;
}

}  // namespace

std::vector<std::string> split_syllable(const std::string& pinyin_with_tone) {
  check_arg(pinyin_with_tone.size() >= 2,
            "syllable too short: '" + pinyin_with_tone + "'");
  const char tone = pinyin_with_tone.back();
  check_arg(tone >= '1' && tone <= '5',
            "invalid tone digit in '" + pinyin_with_tone + "'");
  const std::string base =
      pinyin_with_tone.substr(0, pinyin_with_tone.size() - 1);

  if (base == "er") return {std::string("er") + tone};

  std::size_t first = 0;
  while (first < base.size() && vowel_len_at(base, first) == 0) ++first;
  check_arg(first < base.size(), "no vowel in '" + pinyin_with_tone + "'");
  std::size_t end = first;
  while (end < base.size()) {
    const std::size_t len = vowel_len_at(base, end);
    if (len == 0) break;
    end += len;
  }

  std::vector<std::string> parts;
  if (first > 0) parts.push_back(base.substr(0, first));
  parts.push_back(base.substr(first, end - first) + tone);
  if (end < base.size()) parts.push_back(base.substr(end));
  return parts;
}

int TonemeSet::id_of(const std::string& label) const {
  const auto it = index.find(label);
  check_arg(it != index.end(), "unknown toneme label: '" + label + "'");
  return it->second;
}

TonemeSet build_inventory(const std::vector<std::string>& lexicon) {
  check_arg(!lexicon.empty(), "cannot build an inventory from an empty lexicon");
  std::set<std::string> unique;
  for (const std::string& syl : lexicon)
    for (const std::string& t : split_syllable(syl)) unique.insert(t);
  unique.erase(kSilenceLabel);

  TonemeSet set;
  set.labels.push_back(kSilenceLabel);
  set.labels.insert(set.labels.end(), unique.begin(), unique.end());
  for (std::size_t i = 0; i < set.labels.size(); ++i)
    set.index[set.labels[i]] = static_cast<int>(i);
  return set;
}

const std::vector<std::string>& canonical_syllable_table() {
  static const std::vector<std::string> table = [] {
    std::vector<std::string> out;
    std::istringstream is(kSyllableTable);
    std::string word;
    while (is >> word) out.push_back(word);
    return out;
  }();
  return table;
}

const TonemeSet& canonical_inventory() {
  static const TonemeSet set = [] {
    std::vector<std::string> lexicon;
    for (const std::string& syl : canonical_syllable_table())
      for (char tone = '1'; tone <= '5'; ++tone) lexicon.push_back(syl + tone);
    return build_inventory(lexicon);
  }();
  return set;
}

int tone_of_label(const std::string& label) {
  if (label.empty()) return 0;
  const char c = label.back();
  return (c >= '1' && c <= '5') ? c - '0' : 0;
}

std::string strip_tone(const std::string& label) {
  if (tone_of_label(label) == 0) return label;
  return label.substr(0, label.size() - 1);
}

void save_inventory(const std::string& path, const TonemeSet& set) {
  std::ostringstream os;
  for (const std::string& label : set.labels) os << label << "\n";
  io::write_text_file(path, os.str());
}

TonemeSet load_inventory(const std::string& path) {
  std::istringstream is(io::read_text_file(path));
  TonemeSet set;
  std::string line;
  while (std::getline(is, line))
    if (!line.empty()) set.labels.push_back(line);
  check_state(!set.labels.empty() && set.labels[0] == kSilenceLabel,
              "inventory file must start with the silence label: " + path);
  for (std::size_t i = 0; i < set.labels.size(); ++i)
    set.index[set.labels[i]] = static_cast<int>(i);
  check_state(set.index.size() == set.labels.size(),
              "duplicate labels in inventory file: " + path);
  return set;
}

// ---- TextGrid -----------------------------------------------------------------

namespace {

struct Token {
  std::string text;
  bool quoted = false;
};

// Tokenizes into quoted strings and bare words; "" inside quotes escapes a
// quote, as in Praat files.
std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '"') {
      std::string value;
      ++i;
      while (i < text.size()) {
        if (text[i] == '"') {
          if (i + 1 < text.size() && text[i + 1] == '"') {
            value += '"';
            i += 2;
          } else {
            ++i;
            break;
          }
        } else {
          value += text[i++];
        }
      }
      tokens.push_back(Token{value, true});
    } else {
      std::string value;
      while (i < text.size() &&
             !std::isspace(static_cast<unsigned char>(text[i])) &&
             text[i] != '"')
        value += text[i++];
      tokens.push_back(Token{value, false});
    }
  }
  return tokens;
}

bool is_number(const std::string& s, double* out) {
  if (s.empty()) return false;
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size()) return false;
  *out = v;
  return true;
}

// Structural decoration of the long format ("item [1]:", "xmin =", ...).
bool is_decoration(const std::string& s) {
  static const std::set<std::string> words = {
      "File",  "type",   "Object", "class", "item",   "intervals",
      "points", "size",  "name",   "xmin",  "xmax",   "text",
      "number", "mark",  "time",   "=",     "tiers?", "intervals:",
      "points:"};
  if (words.count(s)) return true;
  if (!s.empty() && s.front() == '[') return true;  // "[1]:" or "[]:"
  return false;
}

struct ValueStream {
  std::vector<Token> values;
  std::size_t pos = 0;

  bool done() const { return pos >= values.size(); }
  const Token& next(const char* what) {
    check_state(pos < values.size(),
                std::string("TextGrid truncated while reading ") + what);
    return values[pos++];
  }
  double next_number(const char* what) {
    const Token& t = next(what);
    double v = 0.0;
    check_state(!t.quoted && is_number(t.text, &v),
                std::string("TextGrid: expected a number for ") + what +
                    ", got '" + t.text + "'");
    return v;
  }
  std::string next_string(const char* what) {
    const Token& t = next(what);
    check_state(t.quoted, std::string("TextGrid: expected a string for ") +
                              what + ", got '" + t.text + "'");
    return t.text;
  }
};

struct RawTier {
  std::string type;
  std::string name;
  std::vector<Interval> intervals;
};

}  // namespace

AlignmentIntervals parse_textgrid(const std::string& text) {
  ValueStream vs;
  for (const Token& t : tokenize(text)) {
    if (!t.quoted && is_decoration(t.text)) continue;
    vs.values.push_back(t);
  }

  check_state(vs.values.size() >= 2, "TextGrid: missing header");
  const std::string file_type = vs.next_string("file type");
  const std::string object_class = vs.next_string("object class");
  check_state(file_type == "ooTextFile" && object_class == "TextGrid",
              "TextGrid: malformed header (" + file_type + "/" +
                  object_class + ")");

  const double global_xmin = vs.next_number("global xmin");
  const double global_xmax = vs.next_number("global xmax");
  check_state(global_xmax >= global_xmin, "TextGrid: non-monotonic extent");

  const Token& exists = vs.next("tiers flag");
  check_state(!exists.quoted && (exists.text == "<exists>" ||
                                 exists.text == "<absent>"),
              "TextGrid: expected <exists>/<absent>, got '" + exists.text +
                  "'");
  AlignmentIntervals out;
  out.total_duration = global_xmax;
  if (exists.text == "<absent>") return out;

  const int tier_count = static_cast<int>(vs.next_number("tier count"));
  std::vector<RawTier> tiers;
  for (int t = 0; t < tier_count; ++t) {
    RawTier tier;
    tier.type = vs.next_string("tier class");
    tier.name = vs.next_string("tier name");
    vs.next_number("tier xmin");
    vs.next_number("tier xmax");
    const int count = static_cast<int>(vs.next_number("entry count"));
    for (int k = 0; k < count; ++k) {
      if (tier.type == "IntervalTier") {
        Interval iv;
        iv.xmin = vs.next_number("interval xmin");
        iv.xmax = vs.next_number("interval xmax");
        iv.label = vs.next_string("interval text");
        check_state(iv.xmax >= iv.xmin, "TextGrid: interval with xmax < xmin");
        if (!tier.intervals.empty())
          check_state(iv.xmin >= tier.intervals.back().xmax - 1e-9,
                      "TextGrid: overlapping intervals");
        tier.intervals.push_back(std::move(iv));
      } else if (tier.type == "TextTier") {
        vs.next_number("point time");
        vs.next_string("point mark");
      } else {
        fail("TextGrid: unknown tier class '" + tier.type + "'");
      }
    }
    tiers.push_back(std::move(tier));
  }

  const RawTier* phones = nullptr;
  for (const RawTier& tier : tiers)
    if (tier.type == "IntervalTier" && tier.name == "phones") phones = &tier;
  if (phones == nullptr) {
    // Fall back to a unique interval tier.
    const RawTier* only = nullptr;
    for (const RawTier& tier : tiers)
      if (tier.type == "IntervalTier") {
        check_state(only == nullptr,
                    "TextGrid: multiple interval tiers and none named "
                    "'phones'");
        only = &tier;
      }
    check_state(only != nullptr, "TextGrid: no interval tier");
    phones = only;
  }

  for (const Interval& iv : phones->intervals) {
    check_state(iv.xmin >= -1e-9 && iv.xmax <= global_xmax + 1e-6,
                "TextGrid: interval outside [0, total duration]");
    if (!iv.label.empty()) out.intervals.push_back(iv);
  }
  return out;
}

std::string format_textgrid(const AlignmentIntervals& intervals) {
  std::ostringstream os;
  os.precision(12);
  os << "File type = \"ooTextFile\"\n"
     << "Object class = \"TextGrid\"\n\n"
     << "xmin = 0\n"
     << "xmax = " << intervals.total_duration << "\n"
     << "tiers? <exists>\n"
     << "size = 1\n"
     << "item []:\n"
     << "    item [1]:\n"
     << "        class = \"IntervalTier\"\n"
     << "        name = \"phones\"\n"
     << "        xmin = 0\n"
     << "        xmax = " << intervals.total_duration << "\n"
     << "        intervals: size = " << intervals.intervals.size() << "\n";
  for (std::size_t i = 0; i < intervals.intervals.size(); ++i) {
    const Interval& iv = intervals.intervals[i];
    os << "        intervals [" << (i + 1) << "]:\n"
       << "            xmin = " << iv.xmin << "\n"
       << "            xmax = " << iv.xmax << "\n"
       << "            text = \"" << iv.label << "\"\n";
  }
  return os.str();
}

std::vector<int> rasterize(const AlignmentIntervals& intervals, int frames,
                           const TonemeSet& set) {
  check_arg(frames >= 0, "frame count must be non-negative");
  // The hop-rate frame estimate minus the analysis-window edge loss
  // (window/hop - 1 = 3 frames), with two frames of slack on top.
  const double hop_rate_frames = intervals.total_duration * 62.5;
  check_arg(std::abs(frames - hop_rate_frames) <= 6.0,
            "frame count inconsistent with interval duration");

  std::vector<int> ids(static_cast<std::size_t>(frames), 0);
  for (int j = 1; j <= frames; ++j) {
    const double t = (j - 0.5) / 62.5;
    for (const Interval& iv : intervals.intervals) {
      if (t >= iv.xmin && t < iv.xmax) {
        if (iv.label.empty() || iv.label == kSilenceLabel) break;
        ids[static_cast<std::size_t>(j - 1)] = set.id_of(iv.label);
        break;
      }
    }
  }
  return ids;
}

}  // namespace semg2v::toneme
