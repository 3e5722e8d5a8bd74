#include "tonegroup/classify.hpp"

#include <algorithm>
#include <charconv>

#include "tonegroup/error.hpp"
#include "tonegroup/transform.hpp"

namespace tonegroup {

namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

void require_arity(const Chord& chord, std::size_t k) {
  if (chord.size() != k) {
    throw Error(Errc::WrongArity, "expected a " + std::to_string(k) + "-tone chord, got " +
                                      std::to_string(chord.size()) + " tones");
  }
}

int count_small_parts(const Chord& chord) {
  const auto p = to_partition(chord);
  return static_cast<int>(std::count_if(p.parts().begin(), p.parts().end(),
                                        [](int part) { return part <= 2; }));
}

template <class FamilyT, std::size_t N>
LabelTable build_table(const FamilyT (&families)[N]) {
  LabelTable table;
  for (FamilyT f : families) {
    Chord c = root_chord(f);
    for (int n = 0; n < inversion_count(f); ++n) {
      table.emplace(c, ChordLabel{f, n});
      c = invert(c);
    }
  }
  return table;
}

}  // namespace

std::string_view to_string(TriadFamily family) {
  switch (family) {
    case TriadFamily::Major: return "Major";
    case TriadFamily::Minor: return "Minor";
    case TriadFamily::Diminished: return "Diminished";
    case TriadFamily::Augmented: return "Augmented";
  }
  return "?";
}

std::string_view to_string(SeventhFamily family) {
  switch (family) {
    case SeventhFamily::MM: return "MM";
    case SeventhFamily::mM: return "mM";
    case SeventhFamily::AM: return "AM";
    case SeventhFamily::Mm: return "Mm";
    case SeventhFamily::dm: return "dm";
    case SeventhFamily::mm: return "mm";
    case SeventhFamily::dd: return "dd";
  }
  return "?";
}

std::string_view to_string(const Family& family) {
  return std::visit([](auto f) { return to_string(f); }, family);
}

std::string to_string(const ChordLabel& label) {
  return std::string(to_string(label.family)) + std::to_string(label.inversion);
}

ChordLabel parse_label(std::string_view text) {
  const auto digit = text.find_first_of("0123456789");
  if (digit == std::string_view::npos || digit == 0) {
    throw Error(Errc::ParseError, "label must be <family><inversion>: '" + std::string(text) + "'");
  }
  const auto name = text.substr(0, digit);
  int inversion = 0;
  const auto [ptr, ec] = std::from_chars(text.data() + digit, text.data() + text.size(), inversion);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(Errc::ParseError, "bad inversion index in '" + std::string(text) + "'");
  }
  std::optional<Family> family;
  for (auto f : kTriadFamilies) {
    if (to_string(f) == name) family = f;
  }
  for (auto f : kSeventhFamilies) {
    if (to_string(f) == name) family = f;
  }
  if (!family) throw Error(Errc::ParseError, "unknown chord family '" + std::string(name) + "'");
  if (inversion >= inversion_count(*family)) {
    throw Error(Errc::ParseError, "inversion out of range in '" + std::string(text) + "'");
  }
  return {*family, inversion};
}

Chord root_chord(TriadFamily family) {
  switch (family) {
    case TriadFamily::Major: return make_chord({0, 4, 7});
    case TriadFamily::Minor: return make_chord({0, 3, 7});
    case TriadFamily::Diminished: return make_chord({0, 3, 6});
    case TriadFamily::Augmented: return make_chord({0, 4, 8});
  }
  throw Error(Errc::InvalidSize, "unknown triad family");
}

Chord root_chord(SeventhFamily family) {
  switch (family) {
    case SeventhFamily::MM: return make_chord({0, 4, 7, 11});
    case SeventhFamily::mM: return make_chord({0, 3, 7, 11});
    case SeventhFamily::AM: return make_chord({0, 4, 8, 11});
    case SeventhFamily::Mm: return make_chord({0, 4, 7, 10});
    case SeventhFamily::dm: return make_chord({0, 3, 6, 10});
    case SeventhFamily::mm: return make_chord({0, 3, 7, 10});
    case SeventhFamily::dd: return make_chord({0, 3, 6, 9});
  }
  throw Error(Errc::InvalidSize, "unknown seventh family");
}

Chord root_chord(const Family& family) {
  return std::visit([](auto f) { return root_chord(f); }, family);
}

int inversion_count(const Family& family) {
  return static_cast<int>(orbit(root_chord(family), std::vector<Op>{Op::Invert}).size());
}

Chord chord_of(const ChordLabel& label) {
  if (label.inversion < 0 || label.inversion >= inversion_count(label.family)) {
    throw Error(Errc::InvalidSize, "no such inversion: " + to_string(label));
  }
  return invert_n(root_chord(label.family), label.inversion);
}

bool is_harmonic_triad(const Chord& chord) {
  require_arity(chord, 3);
  return count_small_parts(chord) == 0;
}

bool is_harmonic_seventh(const Chord& chord) {
  require_arity(chord, 4);
  return count_small_parts(chord) <= 1;
}

const LabelTable& triad_table() {
  static const LabelTable table = build_table(kTriadFamilies);
  return table;
}

const LabelTable& seventh_table() {
  static const LabelTable table = build_table(kSeventhFamilies);
  return table;
}

Classification classify(const Chord& chord) {
  const bool triad = chord.size() == 3;
  if (!triad && chord.size() != 4) {
    throw Error(Errc::WrongArity, "classification covers 3- and 4-tone chords, got " +
                                      std::to_string(chord.size()) + " tones");
  }
  const bool harmonic = triad ? is_harmonic_triad(chord) : is_harmonic_seventh(chord);
  if (!harmonic) return NotHarmonic{};
  const auto& table = triad ? triad_table() : seventh_table();
  if (auto it = table.find(chord); it != table.end()) return it->second;
  return Untabulated{};
}

std::string to_string(const Classification& result) {
  return std::visit(Overloaded{
                        [](const ChordLabel& label) { return to_string(label); },
                        [](NotHarmonic) { return std::string("not harmonic"); },
                        [](Untabulated) { return std::string("harmonic (untabulated)"); },
                    },
                    result);
}

}  // namespace tonegroup
