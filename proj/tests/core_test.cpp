#include <doctest.h>

#include <set>

#include "oracle.hpp"
#include "tonegroup/core.hpp"
#include "tonegroup/error.hpp"

using namespace tonegroup;

namespace {

Errc error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected tonegroup::Error");
  return Errc::ParseError;
}

std::vector<int> parts(const Composition& c) { return {c.parts().begin(), c.parts().end()}; }
std::vector<int> parts(const Partition& p) { return {p.parts().begin(), p.parts().end()}; }

}  // namespace

TEST_CASE("make_chord validates its input") {
  CHECK(make_chord({0, 4, 7}).values() == std::vector<int>{0, 4, 7});
  CHECK(make_chord({0}).size() == 1);

  CHECK(error_of([] { make_chord(std::span<const int>{}); }) == Errc::EmptyChord);
  CHECK(error_of([] { make_chord({4, 7}); }) == Errc::FirstToneNotZero);
  CHECK(error_of([] { make_chord({0, 7, 4}); }) == Errc::NotStrictlyIncreasing);
  CHECK(error_of([] { make_chord({0, 4, 4}); }) == Errc::NotStrictlyIncreasing);
  CHECK(error_of([] { make_chord({0, 4, 12}); }) == Errc::ToneOutOfRange);
  CHECK(error_of([] { make_chord({0, -1}); }) == Errc::ToneOutOfRange);
  CHECK(error_of([] { PitchClass::of(12); }) == Errc::ToneOutOfRange);
}

TEST_CASE("normalize transposes to the lowest pitch class") {
  const std::vector<int> e_major{4, 8, 11};
  CHECK(normalize(e_major) == make_chord({0, 4, 7}));
  // {7,11,14} reduces to {2,7,11}: lowest class 2 becomes the root.
  const std::vector<int> g_major{7, 11, 14};
  CHECK(normalize(g_major) == make_chord({0, 5, 9}));
  const std::vector<int> doubled{4, 16, 9, -3, 11};
  CHECK(normalize(doubled) == make_chord({0, 5, 7}));
  CHECK(error_of([] { normalize(std::span<const int>{}); }) == Errc::EmptyChord);
}

TEST_CASE("chord to composition and partition") {
  CHECK(parts(to_composition(make_chord({0, 4, 7}))) == std::vector<int>{4, 3, 5});
  CHECK(parts(to_composition(make_chord({0, 4, 7, 11}))) == std::vector<int>{4, 3, 4, 1});
  CHECK(parts(to_composition(make_chord({0}))) == std::vector<int>{12});

  CHECK(parts(to_partition(make_chord({0, 4, 7}))) == std::vector<int>{3, 4, 5});
  CHECK(parts(to_partition(make_chord({0, 3, 8}))) == std::vector<int>{3, 4, 5});
  CHECK(parts(to_partition(make_chord({0, 3, 6, 9}))) == std::vector<int>{3, 3, 3, 3});
}

TEST_CASE("composition to chord") {
  CHECK(to_chord(Composition::of({3, 5, 4})) == make_chord({0, 3, 8}));
  CHECK(to_chord(Composition::of({12})) == make_chord({0}));
  CHECK(to_chord(Composition::of({4, 3, 4, 1})) == make_chord({0, 4, 7, 11}));

  CHECK(error_of([] { Composition::of({4, 4}); }) == Errc::InvalidComposition);
  CHECK(error_of([] { Composition::of({0, 12}); }) == Errc::InvalidComposition);
  CHECK(error_of([] { Composition::of({}); }) == Errc::InvalidComposition);
  CHECK(error_of([] { Partition::of({13, -1}); }) == Errc::InvalidPartition);
  CHECK(parts(Partition::of({5, 3, 4})) == std::vector<int>{3, 4, 5});
}

TEST_CASE("round trip and sum law, exhaustive for k <= 6") {
  for (int k = 1; k <= 6; ++k) {
    for (const auto& c : enumerate_chords(k)) {
      const auto comp = to_composition(c);
      int sum = 0;
      for (int p : comp.parts()) sum += p;
      CHECK(sum == 12);
      CHECK(comp.size() == c.size());
      CHECK(to_chord(comp) == c);
    }
  }
}

TEST_CASE("enumerate_chords agrees with a scan of all pitch-class sets") {
  const std::size_t expected_counts[] = {1, 11, 55, 165, 330, 462, 462, 330, 165, 55, 11, 1};
  for (int k = 1; k <= 12; ++k) {
    const auto chords = enumerate_chords(k);
    REQUIRE(chords.size() == expected_counts[k - 1]);
    const auto reference = oracle::all_chords(k);
    REQUIRE(reference.size() == chords.size());
    for (std::size_t j = 0; j < chords.size(); ++j) CHECK(chords[j].values() == reference[j]);
  }
  CHECK(enumerate_chords(1) == std::vector<Chord>{make_chord({0})});
  CHECK(error_of([] { enumerate_chords(0); }) == Errc::InvalidSize);
  CHECK(error_of([] { enumerate_chords(13); }) == Errc::InvalidSize);
}

TEST_CASE("enumerate_partitions agrees with sorted compositions") {
  for (int k = 1; k <= 12; ++k) {
    const auto ps = enumerate_partitions(k);
    const auto reference = oracle::partitions(k);
    REQUIRE(ps.size() == reference.size());
    for (std::size_t j = 0; j < ps.size(); ++j) CHECK(parts(ps[j]) == reference[j]);
  }
  CHECK(enumerate_partitions(1) == std::vector<Partition>{Partition::of({12})});
  CHECK(enumerate_partitions(12) ==
        std::vector<Partition>{Partition::of(std::vector<int>(12, 1))});
  CHECK(error_of([] { enumerate_partitions(0); }) == Errc::InvalidSize);

  std::vector<Partition> no_small;
  for (const auto& p : enumerate_partitions(3)) {
    if (p[0] >= 3) no_small.push_back(p);
  }
  CHECK(no_small == std::vector<Partition>{Partition::of({3, 3, 6}), Partition::of({3, 4, 5}),
                                           Partition::of({4, 4, 4})});
}

TEST_CASE("chords_of_partition") {
  CHECK(chords_of_partition(Partition::of({4, 4, 3, 1})).size() == 12);
  CHECK(chords_of_partition(Partition::of({3, 3, 3, 3})) ==
        std::vector<Chord>{make_chord({0, 3, 6, 9})});

  // Prefix sums of the six orderings of 3,4,5.
  const std::vector<Chord> expected{make_chord({0, 3, 7}), make_chord({0, 3, 8}),
                                    make_chord({0, 4, 7}), make_chord({0, 4, 9}),
                                    make_chord({0, 5, 8}), make_chord({0, 5, 9})};
  CHECK(chords_of_partition(Partition::of({3, 4, 5})) == expected);
}

TEST_CASE("partition fibers cover every chord exactly once") {
  for (int k = 1; k <= 12; ++k) {
    std::multiset<Chord> covered;
    for (const auto& p : enumerate_partitions(k)) {
      for (const auto& c : chords_of_partition(p)) {
        CHECK(to_partition(c) == p);
        CHECK(oracle::gap_multiset(c.values()) == parts(p));
        covered.insert(c);
      }
    }
    const auto all = enumerate_chords(k);
    CHECK(std::equal(covered.begin(), covered.end(), all.begin(), all.end()));
  }
}

TEST_CASE("text forms") {
  CHECK(to_string(make_chord({0, 4, 7, 11})) == "0,4,7,11");
  CHECK(to_string(Partition::of({5, 4, 3})) == "[3,4,5]");
  CHECK(to_string(Composition::of({4, 3, 5})) == "[4,3,5]");

  CHECK(parse_chord("0,4,7") == make_chord({0, 4, 7}));
  CHECK(parse_chord(" (0, 4, 7) ") == make_chord({0, 4, 7}));
  CHECK(parse_chord("0") == make_chord({0}));
  CHECK(parse_partition("[5,3,4]") == Partition::of({3, 4, 5}));
  CHECK(parse_composition("[ 4, 3, 5 ]") == Composition::of({4, 3, 5}));

  CHECK(error_of([] { parse_chord("0,,4"); }) == Errc::ParseError);
  CHECK(error_of([] { parse_chord("0;4"); }) == Errc::ParseError);
  CHECK(error_of([] { parse_chord("zero"); }) == Errc::ParseError);
  CHECK(error_of([] { parse_chord(""); }) == Errc::EmptyChord);
  CHECK(error_of([] { parse_chord("0,7,4"); }) == Errc::NotStrictlyIncreasing);
  CHECK(error_of([] { parse_partition("3,4,5"); }) == Errc::ParseError);
  CHECK(error_of([] { parse_partition("[3,4,4]"); }) == Errc::InvalidPartition);
}
