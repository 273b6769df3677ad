#pragma once

#include <string>

#include "braidthom/permutation.hpp"
#include "braidthom/tree.hpp"

namespace braidthom {

/// Element (T_-, σ, T_+) of Thompson's group V, σ(k) being the leaf of
/// `left` fed by leaf k of `right`.
struct VElement {
  Tree left;
  Permutation perm;
  Tree right;

  VElement() : perm(Permutation::identity(1)) {}
  /// Throws DomainError when the leaf counts disagree with perm.size().
  VElement(Tree l, Permutation p, Tree r);

  static VElement identity() { return {}; }

  friend bool operator==(const VElement&, const VElement&) = default;
};

/// Adds a caret at leaf k of `right` and at leaf σ(k) of `left`.
VElement v_expand(const VElement& v, int k);

/// Unique reduced representative.
VElement v_reduce(const VElement& v);

VElement v_mul(const VElement& a, const VElement& b);
VElement v_inv(const VElement& a);
bool v_equal(const VElement& a, const VElement& b);
bool v_is_identity(const VElement& a);

std::string to_string(const VElement& v);

}  // namespace braidthom
