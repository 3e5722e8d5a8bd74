#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "tonegroup/core.hpp"

namespace tonegroup {

enum class TriadFamily { Major, Minor, Diminished, Augmented };

/// Seventh-chord families named triad quality + seventh quality:
/// MM major-major ("major seventh"), mM minor-major, AM augmented-major,
/// Mm major-minor ("dominant seventh"), dm diminished-minor
/// ("half-diminished"), mm minor-minor, dd diminished-diminished
/// ("fully diminished").
enum class SeventhFamily { MM, mM, AM, Mm, dm, mm, dd };

inline constexpr TriadFamily kTriadFamilies[] = {
    TriadFamily::Major, TriadFamily::Minor, TriadFamily::Diminished, TriadFamily::Augmented};
inline constexpr SeventhFamily kSeventhFamilies[] = {
    SeventhFamily::MM, SeventhFamily::mM, SeventhFamily::AM, SeventhFamily::Mm,
    SeventhFamily::dm, SeventhFamily::mm, SeventhFamily::dd};

using Family = std::variant<TriadFamily, SeventhFamily>;

/// (family, n): the n-th inversion of the family's root chord.
struct ChordLabel {
  Family family;
  int inversion = 0;

  friend bool operator==(const ChordLabel&, const ChordLabel&) = default;
  friend auto operator<=>(const ChordLabel&, const ChordLabel&) = default;
};

std::string_view to_string(TriadFamily family);
std::string_view to_string(SeventhFamily family);
std::string_view to_string(const Family& family);
/// "Major2", "MM0", "dm3".
std::string to_string(const ChordLabel& label);
/// Throws Error{ParseError}.
ChordLabel parse_label(std::string_view text);

Chord root_chord(TriadFamily family);
Chord root_chord(SeventhFamily family);
Chord root_chord(const Family& family);
/// Size of the family's orbit under inversion (1 for Augmented and dd).
int inversion_count(const Family& family);
/// Throws Error{InvalidSize} if the inversion index is out of range.
Chord chord_of(const ChordLabel& label);

/// No part of the partition is <= 2. Throws Error{WrongArity} unless k = 3.
bool is_harmonic_triad(const Chord& chord);
/// At most one part of the partition is <= 2. Throws Error{WrongArity}
/// unless k = 4. Besides the tabulated families this also admits the twelve
/// chords of partition [1,3,3,5], which carry no family label.
bool is_harmonic_seventh(const Chord& chord);

using LabelTable = std::map<Chord, ChordLabel>;

/// The ten labeled harmonic triads, generated from the family roots by
/// inversion. Built once, immutable.
const LabelTable& triad_table();
/// The 25 labeled seventh chords.
const LabelTable& seventh_table();

struct NotHarmonic {
  friend bool operator==(NotHarmonic, NotHarmonic) = default;
};
/// Passes the harmonic predicate but belongs to no tabulated family.
struct Untabulated {
  friend bool operator==(Untabulated, Untabulated) = default;
};

using Classification = std::variant<ChordLabel, NotHarmonic, Untabulated>;

/// Throws Error{WrongArity} unless k is 3 or 4.
Classification classify(const Chord& chord);
std::string to_string(const Classification& result);

}  // namespace tonegroup
