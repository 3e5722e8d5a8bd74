#pragma once

// The chord operators and the group actions they generate.
//
//   invert (i):  (0,a_1,...,a_{k-1}) -> (0, a_2-a_1, ..., a_{k-1}-a_1, 12-a_1)
//   dual   (d):  (0,a_1,...,a_{k-1}) -> (0, 12-a_{k-1}, ..., 12-a_1)
//   augdim (a):  (0,a_1,a_2,a_3)     -> (0, a_1, a_1+a_3-a_2, a_3)
//
// i has order k and d is an involution; together they give a dihedral action
// of order 2k with d i = i^{-1} d. On tetrads a is a further involution, and
// {i, d, a} act on the four gaps as the full symmetric group S_4.
//
// Words are applied left to right: "id" means invert, then dual. This is the
// reverse of algebraic composition order.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tonegroup/core.hpp"

namespace tonegroup {

enum class Op { Invert, Dual, AugDim };

using Word = std::vector<Op>;

char symbol(Op op);

/// Identity on the one-tone chord.
Chord invert(const Chord& chord);
Chord dual(const Chord& chord);
/// Throws Error{WrongArity} unless the chord has four tones.
Chord augdim(const Chord& chord);

Chord apply(Op op, const Chord& chord);
Chord apply_word(std::span<const Op> word, const Chord& chord);
/// n applications of invert.
Chord invert_n(const Chord& chord, int n);

/// Case-insensitive word over {i,d,a}; the empty string is the identity word.
Word parse_word(std::string_view text);
/// Comma-separated generator list such as "i,d,a"; duplicates are dropped.
std::vector<Op> parse_generators(std::string_view text);
std::string to_string(std::span<const Op> word);

/// Closure of {chord} under the generators, sorted lexicographically.
/// Throws Error{WrongArity} when AugDim is requested for a non-tetrad.
std::vector<Chord> orbit(const Chord& chord, std::span<const Op> generators);

// Gap-level counterparts of the operators, acting on compositions directly.
namespace gaps {

Composition rotate_left(const Composition& comp);
Composition reversed(const Composition& comp);
/// Swaps parts 2 and 3; requires four parts.
Composition swap_middle(const Composition& comp);

}  // namespace gaps

}  // namespace tonegroup
