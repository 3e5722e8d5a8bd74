#include <doctest.h>

#include <map>
#include <set>

#include "oracle.hpp"
#include "tonegroup/classify.hpp"
#include "tonegroup/error.hpp"
#include "tonegroup/transform.hpp"

using namespace tonegroup;

namespace {

Chord ch(std::initializer_list<int> tones) { return make_chord(tones); }

ChordLabel label_of(std::initializer_list<int> tones) {
  const auto result = classify(make_chord(tones));
  REQUIRE(std::holds_alternative<ChordLabel>(result));
  return std::get<ChordLabel>(result);
}

}  // namespace

TEST_CASE("harmonic triad predicate") {
  CHECK(is_harmonic_triad(ch({0, 4, 7})));
  CHECK_FALSE(is_harmonic_triad(ch({0, 2, 7})));
  CHECK_THROWS_AS(is_harmonic_triad(ch({0, 4, 7, 10})), Error);

  int harmonic = 0;
  for (const auto& c : enumerate_chords(3)) {
    const bool expected = oracle::small_parts(c.values()) == 0;
    CHECK(is_harmonic_triad(c) == expected);
    harmonic += expected;
  }
  CHECK(harmonic == 10);
}

TEST_CASE("harmonic seventh predicate") {
  CHECK(is_harmonic_seventh(ch({0, 4, 7, 11})));
  CHECK_FALSE(is_harmonic_seventh(ch({0, 1, 2, 7})));
  CHECK_THROWS_AS(is_harmonic_seventh(ch({0, 4, 7})), Error);

  // Brute force over the 165 tetrads. "At most one gap <= 2" admits the 25
  // tabulated chords plus the twelve orderings of [1,3,3,5].
  std::map<std::vector<int>, int> by_partition;
  int harmonic = 0;
  for (const auto& c : enumerate_chords(4)) {
    const bool expected = oracle::small_parts(c.values()) <= 1;
    CHECK(is_harmonic_seventh(c) == expected);
    if (expected) {
      ++harmonic;
      ++by_partition[oracle::gap_multiset(c.values())];
    }
  }
  CHECK(harmonic == 37);
  const std::map<std::vector<int>, int> expected{
      {{1, 3, 3, 5}, 12}, {{1, 3, 4, 4}, 12}, {{2, 3, 3, 4}, 12}, {{3, 3, 3, 3}, 1}};
  CHECK(by_partition == expected);
  CHECK(is_harmonic_seventh(ch({0, 3, 6, 11})));
}

TEST_CASE("triad table") {
  const auto& table = triad_table();
  CHECK(table.size() == 10);
  CHECK(table.at(ch({0, 5, 9})) == ChordLabel{TriadFamily::Major, 2});
  CHECK(table.at(ch({0, 4, 9})) == ChordLabel{TriadFamily::Minor, 1});
  CHECK(table.at(ch({0, 4, 8})) == ChordLabel{TriadFamily::Augmented, 0});
  CHECK(table.at(ch({0, 3, 7})) == ChordLabel{TriadFamily::Minor, 0});
  CHECK(table.at(ch({0, 3, 9})) == ChordLabel{TriadFamily::Diminished, 1});

  std::set<Chord> harmonic;
  for (const auto& c : enumerate_chords(3)) {
    if (is_harmonic_triad(c)) harmonic.insert(c);
  }
  std::set<Chord> domain;
  std::set<ChordLabel> labels;
  for (const auto& [c, label] : table) {
    domain.insert(c);
    labels.insert(label);
    CHECK(chord_of(label) == c);
  }
  CHECK(domain == harmonic);
  CHECK(labels.size() == table.size());
}

TEST_CASE("seventh table rows") {
  const auto& table = seventh_table();
  CHECK(table.size() == 25);
  CHECK(table.at(ch({0, 3, 6, 8})) == ChordLabel{SeventhFamily::Mm, 1});
  CHECK(table.at(ch({0, 1, 5, 9})) == ChordLabel{SeventhFamily::AM, 3});
  CHECK(table.at(ch({0, 3, 6, 9})) == ChordLabel{SeventhFamily::dd, 0});

  std::set<ChordLabel> labels;
  for (const auto& [c, label] : table) {
    labels.insert(label);
    CHECK(chord_of(label) == c);
    CHECK(is_harmonic_seventh(c));
  }
  CHECK(labels.size() == 25);
  CHECK(inversion_count(SeventhFamily::dd) == 1);
  CHECK(inversion_count(TriadFamily::Augmented) == 1);
  CHECK(inversion_count(SeventhFamily::MM) == 4);
}

TEST_CASE("classify") {
  CHECK(label_of({0, 3, 7, 9}) == ChordLabel{SeventhFamily::dm, 1});
  CHECK(label_of({0, 3, 7}) == ChordLabel{TriadFamily::Minor, 0});
  CHECK(std::holds_alternative<NotHarmonic>(classify(ch({0, 1, 2, 3}))));
  CHECK(std::holds_alternative<NotHarmonic>(classify(ch({0, 2, 7}))));
  CHECK(std::holds_alternative<Untabulated>(classify(ch({0, 3, 6, 11}))));
  CHECK_THROWS_AS(classify(ch({0, 7})), Error);
  CHECK_THROWS_AS(classify(ch({0, 2, 4, 7, 9})), Error);

  CHECK(to_string(classify(ch({0, 2, 6, 9}))) == "Mm3");
  CHECK(to_string(classify(ch({0, 3, 8}))) == "Major1");
  CHECK(to_string(classify(ch({0, 1, 2, 3}))) == "not harmonic");
  CHECK(to_string(classify(ch({0, 3, 6, 11}))) == "harmonic (untabulated)");
}

TEST_CASE("labels round-trip through text") {
  for (const auto* table : {&triad_table(), &seventh_table()}) {
    for (const auto& [c, label] : *table) CHECK(parse_label(to_string(label)) == label);
  }
  CHECK(parse_label("dm3") == ChordLabel{SeventhFamily::dm, 3});
  CHECK_THROWS_AS(parse_label("DM3"), Error);
  CHECK_THROWS_AS(parse_label("dd1"), Error);
  CHECK_THROWS_AS(parse_label("MM"), Error);
  CHECK_THROWS_AS(parse_label("3"), Error);
  CHECK_THROWS_AS(chord_of({TriadFamily::Augmented, 1}), Error);
}

TEST_CASE("families share a partition class") {
  const std::map<std::string, std::vector<int>> expected{
      {"Major", {3, 4, 5}}, {"Minor", {3, 4, 5}},     {"Diminished", {3, 3, 6}},
      {"Augmented", {4, 4, 4}}, {"MM", {1, 3, 4, 4}}, {"mM", {1, 3, 4, 4}},
      {"AM", {1, 3, 4, 4}},     {"Mm", {2, 3, 3, 4}}, {"dm", {2, 3, 3, 4}},
      {"mm", {2, 3, 3, 4}},     {"dd", {3, 3, 3, 3}},
  };
  for (const auto* table : {&triad_table(), &seventh_table()}) {
    for (const auto& [c, label] : *table) {
      CHECK(oracle::gap_multiset(c.values()) ==
            expected.at(std::string(to_string(label.family))));
    }
  }
}

TEST_CASE("duality pairs inversion rows") {
  auto at = [](Family f, int n) { return chord_of({f, n}); };
  for (int n = 0; n < 4; ++n) {
    const int m = (3 - n) % 4;
    CHECK(dual(at(SeventhFamily::MM, n)) == at(SeventhFamily::MM, m));
    CHECK(dual(at(SeventhFamily::mM, n)) == at(SeventhFamily::AM, m));
    CHECK(dual(at(SeventhFamily::AM, n)) == at(SeventhFamily::mM, m));
    CHECK(dual(at(SeventhFamily::Mm, n)) == at(SeventhFamily::dm, m));
    CHECK(dual(at(SeventhFamily::dm, n)) == at(SeventhFamily::Mm, m));
    CHECK(dual(at(SeventhFamily::mm, n)) == at(SeventhFamily::mm, m));
  }
  for (int n = 0; n < 3; ++n) {
    CHECK(dual(at(TriadFamily::Major, n)) == at(TriadFamily::Minor, 2 - n));
  }
  CHECK(dual(at(TriadFamily::Diminished, 0)) == at(TriadFamily::Diminished, 2));
  CHECK(dual(at(TriadFamily::Diminished, 1)) == at(TriadFamily::Diminished, 1));
  CHECK(dual(at(TriadFamily::Diminished, 2)) == at(TriadFamily::Diminished, 0));
  // Only the root position satisfies i^3 = d.
  CHECK(invert_n(at(SeventhFamily::MM, 0), 3) == dual(at(SeventhFamily::MM, 0)));
  CHECK(invert_n(at(SeventhFamily::MM, 1), 3) != dual(at(SeventhFamily::MM, 1)));
}
