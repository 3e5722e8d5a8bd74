#include "tonegroup/core.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

#include "tonegroup/error.hpp"

namespace tonegroup {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::EmptyChord: return "EmptyChord";
    case Errc::FirstToneNotZero: return "FirstToneNotZero";
    case Errc::NotStrictlyIncreasing: return "NotStrictlyIncreasing";
    case Errc::ToneOutOfRange: return "ToneOutOfRange";
    case Errc::InvalidSize: return "InvalidSize";
    case Errc::InvalidComposition: return "InvalidComposition";
    case Errc::InvalidPartition: return "InvalidPartition";
    case Errc::WrongArity: return "WrongArity";
    case Errc::ParseError: return "ParseError";
    case Errc::IsomorphismViolation: return "IsomorphismViolation";
  }
  return "Unknown";
}

namespace {

void require_size(int k) {
  if (k < 1 || k > kOctave) {
    throw Error(Errc::InvalidSize, "chord size must be in 1..12, got " + std::to_string(k));
  }
}

bool sums_to_octave(const std::vector<int>& parts) {
  return std::accumulate(parts.begin(), parts.end(), 0) == kOctave;
}

bool all_positive(const std::vector<int>& parts) {
  return std::all_of(parts.begin(), parts.end(), [](int p) { return p >= 1; });
}

std::string join(std::span<const int> values) {
  std::string out;
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (j) out += ',';
    out += std::to_string(values[j]);
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string_view strip_brackets(std::string_view s, char open, char close, bool required) {
  s = trim(s);
  if (s.size() >= 2 && s.front() == open && s.back() == close) return s.substr(1, s.size() - 2);
  if (required) {
    throw Error(Errc::ParseError, std::string("expected ") + open + "..." + close);
  }
  return s;
}

std::vector<int> parse_int_list(std::string_view body) {
  std::vector<int> values;
  if (trim(body).empty()) return values;
  while (true) {
    const auto comma = body.find(',');
    const auto field = trim(body.substr(0, comma));
    int v = 0;
    const auto* first = field.data();
    const auto* last = field.data() + field.size();
    if (!field.empty() && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (field.empty() || ec != std::errc() || ptr != last) {
      throw Error(Errc::ParseError, "not an integer: '" + std::string(field) + "'");
    }
    values.push_back(v);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return values;
}

}  // namespace

PitchClass PitchClass::of(int value) {
  if (value < 0 || value >= kOctave) {
    throw Error(Errc::ToneOutOfRange, "pitch class out of range 0..11: " + std::to_string(value));
  }
  return PitchClass(value);
}

std::vector<int> Chord::values() const {
  std::vector<int> out;
  out.reserve(tones_.size());
  for (auto pc : tones_) out.push_back(pc.value());
  return out;
}

Chord make_chord(std::span<const int> tones) {
  if (tones.empty()) throw Error(Errc::EmptyChord, "chord has no tones");
  std::vector<PitchClass> pcs;
  pcs.reserve(tones.size());
  for (int t : tones) pcs.push_back(PitchClass::of(t));
  if (pcs.front().value() != 0) {
    throw Error(Errc::FirstToneNotZero, "chord must start at 0");
  }
  for (std::size_t j = 1; j < pcs.size(); ++j) {
    if (!(pcs[j - 1] < pcs[j])) {
      throw Error(Errc::NotStrictlyIncreasing, "chord tones must be strictly increasing");
    }
  }
  return Chord(std::move(pcs));
}

Chord normalize(std::span<const int> pitches) {
  if (pitches.empty()) throw Error(Errc::EmptyChord, "chord has no tones");
  std::vector<int> pcs;
  for (int p : pitches) pcs.push_back(((p % kOctave) + kOctave) % kOctave);
  std::sort(pcs.begin(), pcs.end());
  pcs.erase(std::unique(pcs.begin(), pcs.end()), pcs.end());
  const int lowest = pcs.front();
  for (int& p : pcs) p -= lowest;
  return make_chord(pcs);
}

Composition Composition::of(std::vector<int> parts) {
  if (parts.empty() || !all_positive(parts) || !sums_to_octave(parts)) {
    throw Error(Errc::InvalidComposition,
                "composition parts must be positive and sum to 12: [" + join(parts) + "]");
  }
  return Composition(std::move(parts));
}

Partition Partition::of(std::vector<int> parts) {
  if (parts.empty() || !all_positive(parts) || !sums_to_octave(parts)) {
    throw Error(Errc::InvalidPartition,
                "partition parts must be positive and sum to 12: [" + join(parts) + "]");
  }
  std::sort(parts.begin(), parts.end());
  return Partition(std::move(parts));
}

Composition to_composition(const Chord& chord) {
  std::vector<int> parts;
  parts.reserve(chord.size());
  for (std::size_t j = 1; j < chord.size(); ++j) parts.push_back(chord[j] - chord[j - 1]);
  parts.push_back(kOctave - chord[chord.size() - 1]);
  return Composition::of(std::move(parts));
}

Partition to_partition(const Composition& comp) {
  return Partition::of({comp.parts().begin(), comp.parts().end()});
}

Partition to_partition(const Chord& chord) { return to_partition(to_composition(chord)); }

Chord to_chord(const Composition& comp) {
  std::vector<int> tones(comp.size());
  std::exclusive_scan(comp.parts().begin(), comp.parts().end(), tones.begin(), 0);
  return make_chord(tones);
}

std::vector<Chord> enumerate_chords(int k) {
  require_size(k);
  // Walk (k-1)-subsets of 1..11 in lexicographic order.
  std::vector<Chord> out;
  std::vector<int> tones(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) tones[j] = j;
  while (true) {
    out.push_back(make_chord(tones));
    int j = k - 1;
    while (j >= 1 && tones[j] == kOctave - k + j) --j;
    if (j < 1) break;
    ++tones[j];
    for (int m = j + 1; m < k; ++m) tones[m] = tones[m - 1] + 1;
  }
  return out;
}

std::vector<Partition> enumerate_partitions(int k) {
  require_size(k);
  std::vector<Partition> out;
  std::vector<int> parts;
  // Non-decreasing parts; `min` is the smallest admissible next part.
  auto extend = [&](auto&& self, int remaining, int slots, int min) -> void {
    if (slots == 1) {
      if (remaining >= min) {
        parts.push_back(remaining);
        out.push_back(Partition::of(parts));
        parts.pop_back();
      }
      return;
    }
    for (int p = min; p * slots <= remaining; ++p) {
      parts.push_back(p);
      self(self, remaining - p, slots - 1, p);
      parts.pop_back();
    }
  };
  extend(extend, kOctave, k, 1);
  return out;
}

std::vector<Chord> chords_of_partition(const Partition& partition) {
  std::vector<int> order(partition.parts().begin(), partition.parts().end());
  std::vector<Chord> out;
  do {
    out.push_back(to_chord(Composition::of(order)));
  } while (std::next_permutation(order.begin(), order.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(const Chord& chord) { return join(chord.values()); }

std::string to_string(const Composition& comp) { return "[" + join(comp.parts()) + "]"; }

std::string to_string(const Partition& partition) { return "[" + join(partition.parts()) + "]"; }

Chord parse_chord(std::string_view text) {
  const auto values = parse_int_list(strip_brackets(text, '(', ')', false));
  return make_chord(values);
}

Composition parse_composition(std::string_view text) {
  return Composition::of(parse_int_list(strip_brackets(text, '[', ']', true)));
}

Partition parse_partition(std::string_view text) {
  return Partition::of(parse_int_list(strip_brackets(text, '[', ']', true)));
}

}  // namespace tonegroup
