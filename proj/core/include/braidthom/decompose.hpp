#pragma once

#include <cstdint>

#include "braidthom/element.hpp"

namespace braidthom {

/// g = x0^k · embed_hat1(base) · x0^-k · x0^shift.
struct HnnDecomposition {
  std::int64_t shift;
  int k;
  Element base;
};

/// Writes an element of bVhat through the ascending HNN structure with
/// stable letter x0. The recomposition is verified before returning;
/// InternalError signals a convention bug.
HnnDecomposition hnn_decompose(const Element& g);

Element hnn_recompose(const HnnDecomposition& d);

/// bVhat ∩ bP -> bP: keeps the part of [T, β, T] under the root's left
/// child, deleting the strands under the right child.
Element left_part(const Element& g);

/// Right inverse of left_part: [T, β, T] -> [T ∨ ·, β + unbraided strand, T ∨ ·].
Element bp_section(const Element& p);

struct ThreeFactors {
  Element braid_part;   // [T-, β, T+]
  Element first_twist;  // [T+, (m1, 0, …, 0), T+]
  Element other_twists; // [T+, (0, m2, …, mn), T+]
};

/// Splits g = braid_part · first_twist · other_twists using its normal form.
ThreeFactors three_factor(const Element& g);

/// For g = [T, (0, m2, …, mn), T] with trivial braid: the conjugator
/// a = [T'', α, T'] that spreads the twists out, and the element a g a^-1
/// is expected to equal, [T'', (0, m2, 0, m3, …, 0, mn, 0), T''].
/// T' adds n-1 carets on the leftmost leaf, T'' one caret on every other
/// leaf, and α = shuffle_braid of the interleaving permutation.
struct ShuffleConjugation {
  Element conjugator;
  Element expected;
};

ShuffleConjugation shuffle_conjugation(const Element& g);

}  // namespace braidthom
