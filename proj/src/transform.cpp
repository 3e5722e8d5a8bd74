#include "tonegroup/transform.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>

#include "tonegroup/error.hpp"

namespace tonegroup {

char symbol(Op op) {
  switch (op) {
    case Op::Invert: return 'i';
    case Op::Dual: return 'd';
    case Op::AugDim: return 'a';
  }
  return '?';
}

Chord invert(const Chord& chord) {
  const std::size_t k = chord.size();
  if (k == 1) return chord;
  const int base = chord[1];
  std::vector<int> tones{0};
  for (std::size_t j = 2; j < k; ++j) tones.push_back(chord[j] - base);
  tones.push_back(kOctave - base);
  return make_chord(tones);
}

Chord dual(const Chord& chord) {
  std::vector<int> tones{0};
  for (std::size_t j = chord.size() - 1; j >= 1; --j) tones.push_back(kOctave - chord[j]);
  return make_chord(tones);
}

Chord augdim(const Chord& chord) {
  if (chord.size() != 4) {
    throw Error(Errc::WrongArity, "augmented-diminished duality needs a four-tone chord, got " +
                                      std::to_string(chord.size()) + " tones");
  }
  return make_chord({0, chord[1], chord[1] + chord[3] - chord[2], chord[3]});
}

Chord apply(Op op, const Chord& chord) {
  switch (op) {
    case Op::Invert: return invert(chord);
    case Op::Dual: return dual(chord);
    case Op::AugDim: return augdim(chord);
  }
  return chord;
}

Chord apply_word(std::span<const Op> word, const Chord& chord) {
  Chord out = chord;
  for (Op op : word) out = apply(op, out);
  return out;
}

Chord invert_n(const Chord& chord, int n) {
  const int k = static_cast<int>(chord.size());
  n = ((n % k) + k) % k;
  Chord out = chord;
  for (int j = 0; j < n; ++j) out = invert(out);
  return out;
}

namespace {

Op parse_op(char c) {
  switch (std::tolower(static_cast<unsigned char>(c))) {
    case 'i': return Op::Invert;
    case 'd': return Op::Dual;
    case 'a': return Op::AugDim;
    default:
      throw Error(Errc::ParseError, std::string("unknown operator '") + c + "', expected i, d or a");
  }
}

}  // namespace

Word parse_word(std::string_view text) {
  Word word;
  for (char c : text) word.push_back(parse_op(c));
  return word;
}

std::vector<Op> parse_generators(std::string_view text) {
  std::vector<Op> gens;
  bool expect_symbol = true;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == ',') {
      if (expect_symbol) throw Error(Errc::ParseError, "empty generator in list");
      expect_symbol = true;
      continue;
    }
    if (!expect_symbol) throw Error(Errc::ParseError, "generators must be comma-separated");
    const Op op = parse_op(c);
    if (std::find(gens.begin(), gens.end(), op) == gens.end()) gens.push_back(op);
    expect_symbol = false;
  }
  if (gens.empty() || expect_symbol) throw Error(Errc::ParseError, "empty generator list");
  return gens;
}

std::string to_string(std::span<const Op> word) {
  std::string out;
  for (Op op : word) out += symbol(op);
  return out;
}

std::vector<Chord> orbit(const Chord& chord, std::span<const Op> generators) {
  if (chord.size() != 4 &&
      std::find(generators.begin(), generators.end(), Op::AugDim) != generators.end()) {
    throw Error(Errc::WrongArity, "augmented-diminished duality needs a four-tone chord");
  }
  std::set<Chord> seen{chord};
  std::deque<Chord> frontier{chord};
  while (!frontier.empty()) {
    const Chord c = frontier.front();
    frontier.pop_front();
    for (Op op : generators) {
      Chord next = apply(op, c);
      if (seen.insert(next).second) frontier.push_back(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

namespace gaps {

Composition rotate_left(const Composition& comp) {
  std::vector<int> parts(comp.parts().begin(), comp.parts().end());
  std::rotate(parts.begin(), parts.begin() + 1, parts.end());
  return Composition::of(std::move(parts));
}

Composition reversed(const Composition& comp) {
  std::vector<int> parts(comp.parts().rbegin(), comp.parts().rend());
  return Composition::of(std::move(parts));
}

Composition swap_middle(const Composition& comp) {
  if (comp.size() != 4) throw Error(Errc::WrongArity, "swap_middle needs four parts");
  std::vector<int> parts(comp.parts().begin(), comp.parts().end());
  std::swap(parts[1], parts[2]);
  return Composition::of(std::move(parts));
}

}  // namespace gaps

}  // namespace tonegroup
