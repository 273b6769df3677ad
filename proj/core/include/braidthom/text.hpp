#pragma once

#include <string>
#include <string_view>

#include "braidthom/element.hpp"

namespace braidthom {

// Literal grammar, whitespace-insensitive between tokens:
//   element := "[" tree "|" braid? twists? "|" tree "]"
//   tree    := bitstring in preorder, 1 = caret, 0 = leaf
//   braid   := "e" | letter+
//   letter  := "s" digits ("^" int)?
//   twists  := "(" int ("," int)* ")"
// Missing twists mean all zeros. Malformed text throws SyntaxError; a
// well-formed literal whose sizes disagree throws DomainError.

Element parse_element(std::string_view text);

/// Braid literal over `strands` strands.
BraidWord parse_braid(std::string_view text, int strands);

/// Inverse of parse_element: "[10100 | s1 | 10100]".
std::string format_element(const Element& g);

/// {"left": "10100", "word": [[1, 1]], "twists": [0, 0, 0], "right": "10100"}.
/// Runs of one generator collapse into a single [index, exponent] pair.
std::string element_to_json(const Element& g);
Element element_from_json(std::string_view json);

}  // namespace braidthom
