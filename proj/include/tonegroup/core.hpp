#pragma once

// Chords in twelve-tone equal temperament, rooted at pitch class 0, and the
// maps between chords, compositions (ordered gap sequences) and partitions
// (unordered gap multisets) of the octave.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tonegroup {

inline constexpr int kOctave = 12;

class PitchClass {
 public:
  /// Throws Error{ToneOutOfRange} unless 0 <= value < 12.
  static PitchClass of(int value);

  constexpr int value() const noexcept { return value_; }

  friend constexpr auto operator<=>(PitchClass, PitchClass) = default;

 private:
  constexpr explicit PitchClass(int v) noexcept : value_(v) {}
  int value_;
};

/// A simultaneous k-note chord (0, a_1, ..., a_{k-1}): strictly increasing
/// pitch classes starting at 0. Ordered lexicographically by tones.
class Chord {
 public:
  Chord() = delete;

  std::size_t size() const noexcept { return tones_.size(); }
  int operator[](std::size_t j) const { return tones_[j].value(); }
  std::span<const PitchClass> tones() const noexcept { return tones_; }
  std::vector<int> values() const;

  friend bool operator==(const Chord&, const Chord&) = default;
  friend auto operator<=>(const Chord&, const Chord&) = default;

 private:
  friend Chord make_chord(std::span<const int> tones);
  explicit Chord(std::vector<PitchClass> tones) : tones_(std::move(tones)) {}

  std::vector<PitchClass> tones_;
};

/// Ordered positive parts summing to 12 (an "ordered partition").
class Composition {
 public:
  /// Throws Error{InvalidComposition}.
  static Composition of(std::vector<int> parts);

  std::size_t size() const noexcept { return parts_.size(); }
  int operator[](std::size_t j) const { return parts_[j]; }
  std::span<const int> parts() const noexcept { return parts_; }

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition&, const Composition&) = default;

 private:
  explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {}
  std::vector<int> parts_;
};

/// Unordered positive parts summing to 12, stored ascending.
class Partition {
 public:
  /// Sorts `parts`; throws Error{InvalidPartition} on a non-positive part or
  /// a sum other than 12.
  static Partition of(std::vector<int> parts);

  std::size_t size() const noexcept { return parts_.size(); }
  int operator[](std::size_t j) const { return parts_[j]; }
  std::span<const int> parts() const noexcept { return parts_; }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {}
  std::vector<int> parts_;
};

/// Strict constructor. Errors: EmptyChord, FirstToneNotZero,
/// NotStrictlyIncreasing, ToneOutOfRange.
Chord make_chord(std::span<const int> tones);
inline Chord make_chord(std::initializer_list<int> tones) {
  return make_chord(std::span<const int>(tones.begin(), tones.size()));
}

/// Transposes an arbitrary pitch-class collection so its lowest class sits at
/// 0, reducing mod 12 and dropping duplicates. Throws on an empty input.
Chord normalize(std::span<const int> pitches);

Composition to_composition(const Chord& chord);
Partition to_partition(const Chord& chord);
Partition to_partition(const Composition& comp);
/// Prefix sums: the inverse of to_composition.
Chord to_chord(const Composition& comp);

/// All chords with k tones (0 plus each (k-1)-subset of 1..11), lexicographic.
/// Throws Error{InvalidSize} unless 1 <= k <= 12.
std::vector<Chord> enumerate_chords(int k);

/// All partitions of 12 into exactly k parts, lexicographic.
std::vector<Partition> enumerate_partitions(int k);

/// One chord per distinct ordering of the partition's parts, lexicographic.
std::vector<Chord> chords_of_partition(const Partition& partition);

// Text forms: chords as "0,4,7" (a surrounding "(...)" and spaces are
// accepted on input), compositions and partitions as "[3,4,5]".
std::string to_string(const Chord& chord);
std::string to_string(const Composition& comp);
std::string to_string(const Partition& partition);

/// Throws Error{ParseError} on malformed text, otherwise the make_chord errors.
Chord parse_chord(std::string_view text);
Composition parse_composition(std::string_view text);
Partition parse_partition(std::string_view text);

}  // namespace tonegroup
