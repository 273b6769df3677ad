#include "braidthom/vgroup.hpp"

#include "braidthom/errors.hpp"

namespace braidthom {

VElement::VElement(Tree l, Permutation p, Tree r)
    : left(std::move(l)), perm(std::move(p)), right(std::move(r)) {
  if (left.leaf_count() != perm.size() || right.leaf_count() != perm.size()) {
    throw DomainError("V element: leaf counts " + std::to_string(left.leaf_count()) + "/" +
                      std::to_string(right.leaf_count()) + " do not match permutation size " +
                      std::to_string(perm.size()));
  }
}

VElement v_expand(const VElement& v, int k) {
  if (k < 1 || k > v.perm.size()) throw DomainError("v_expand: leaf index out of range");
  return VElement(v.left.add_caret(v.perm(k)), v.perm.doubled(k), v.right.add_caret(k));
}

namespace {

// Smallest reducible caret pair of `right`, or 0.
int reduction_site(const VElement& v) {
  for (int i : v.right.caret_pairs()) {
    const int j = v.perm(i);
    if (v.perm(i + 1) == j + 1 && v.left.is_caret_pair(j)) return i;
  }
  return 0;
}

}  // namespace

VElement v_reduce(const VElement& v) {
  VElement cur = v;
  while (int i = reduction_site(cur)) {
    const int j = cur.perm(i);
    cur = VElement(cur.left.remove_caret_pair(j), cur.perm.removed(i + 1),
                   cur.right.remove_caret_pair(i));
  }
  return cur;
}

VElement v_mul(const VElement& a, const VElement& b) {
  const Tree middle = common_refinement(a.right, b.left);
  VElement x = a;
  while (int k = x.right.first_leaf_to_refine(middle)) x = v_expand(x, k);
  VElement y = b;
  while (int j = y.left.first_leaf_to_refine(middle)) y = v_expand(y, y.perm.inverse()(j));
  return v_reduce(VElement(x.left, compose(x.perm, y.perm), y.right));
}

VElement v_inv(const VElement& a) { return VElement(a.right, a.perm.inverse(), a.left); }

bool v_equal(const VElement& a, const VElement& b) { return v_reduce(a) == v_reduce(b); }

bool v_is_identity(const VElement& a) { return v_reduce(a) == VElement::identity(); }

std::string to_string(const VElement& v) {
  return "(" + v.left.bits() + ", " + v.perm.to_string() + ", " + v.right.bits() + ")";
}

}  // namespace braidthom
