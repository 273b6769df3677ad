#include "braidthom/decompose.hpp"

#include <algorithm>

#include "braidthom/errors.hpp"
#include "braidthom/named.hpp"
#include "braidthom/subgroups.hpp"

namespace braidthom {
namespace {

// Inverse of embed_hat1 on a normal form lying in bVhat(1).
Element strip_hat1(const Element& e) {
  const Element n = normalize(e);
  if (n.left.is_trivial()) return Element::identity();
  if (!n.left.right_subtree().is_trivial() || !n.right.right_subtree().is_trivial()) {
    throw InternalError("strip_hat1: trees do not have right depth 1");
  }
  return normalize(Element(n.left.left_subtree(),
                           RibbonBraid(delete_strand(n.braid(), n.strands())),
                           n.right.left_subtree()));
}

}  // namespace

Element hnn_recompose(const HnnDecomposition& d) {
  const Element x0 = named("x0");
  const Element xk = power(x0, d.k);
  return mul(mul(mul(xk, embed_hat1(d.base)), inv(xk)), power(x0, d.shift));
}

HnnDecomposition hnn_decompose(const Element& g) {
  if (!member(g, Subgroup::bVhat)) throw DomainError("hnn_decompose: not in bVhat");
  const Element x0 = named("x0");
  HnnDecomposition d{chi1(g), 0, Element::identity()};
  const Element in_kernel = mul(g, power(x0, -d.shift));
  d.k = std::max(0, in_kernel.right.right_depth() - 1);
  const Element pushed = mul(mul(power(x0, -d.k), in_kernel), power(x0, d.k));
  if (!member(pushed, Subgroup::bVhat1)) {
    throw InternalError("hnn_decompose: conjugate by x0^" + std::to_string(d.k) +
                        " left bVhat(1)");
  }
  d.base = strip_hat1(pushed);
  if (!equal(hnn_recompose(d), g)) throw InternalError("hnn_decompose: recomposition failed");
  return d;
}

Element left_part(const Element& g) {
  if (!member(g, Subgroup::bVhat) || !member(g, Subgroup::bP)) {
    throw DomainError("left_part: not in bVhat ∩ bP");
  }
  const Element n = normalize(g);
  if (n.left != n.right) throw InternalError("left_part: bP normal form is not symmetric");
  if (n.left.is_trivial()) return Element::identity();
  const Tree sub = n.left.left_subtree();
  BraidWord b = n.braid();
  for (int s = n.strands(); s > sub.leaf_count(); --s) b = delete_strand(b, s);
  return normalize(Element(sub, RibbonBraid(std::move(b)), sub));
}

Element bp_section(const Element& p) {
  if (!member(p, Subgroup::bP)) throw DomainError("bp_section: not in bP");
  const Element n = normalize(p);
  if (n.left != n.right) throw InternalError("bp_section: bP normal form is not symmetric");
  const Tree t = Tree::join(n.left, Tree());
  return normalize(Element(t, RibbonBraid(n.braid().with_strands(n.strands() + 1)), t));
}

ThreeFactors three_factor(const Element& g) {
  const Element n = normalize(g);
  const int s = n.strands();
  Twists first(static_cast<std::size_t>(s), 0);
  first[0] = n.twists()[0];
  Twists rest = n.twists();
  rest[0] = 0;
  return {normalize(Element(n.left, RibbonBraid(n.braid()), n.right)),
          normalize(Element(n.right, RibbonBraid(BraidWord(s), std::move(first)), n.right)),
          normalize(Element(n.right, RibbonBraid(BraidWord(s), std::move(rest)), n.right))};
}

ShuffleConjugation shuffle_conjugation(const Element& g) {
  if (g.left != g.right || !g.braid().freely_reduced().empty() || g.twists()[0] != 0) {
    throw DomainError("shuffle_conjugation: expected [T, (0, m2, …, mn), T]");
  }
  const int n = g.strands();
  Tree leftmost = g.left;   // T'
  Tree spread = g.left;     // T''
  for (int c = 1; c < n; ++c) leftmost = leftmost.add_caret(1);
  for (int leaf = n; leaf >= 2; --leaf) spread = spread.add_caret(leaf);

  const int wide = 2 * n - 1;
  std::vector<int> images(static_cast<std::size_t>(wide));
  for (int i = 1; i <= n; ++i) images[static_cast<std::size_t>(i - 1)] = 2 * i - 1;
  for (int r = 1; r < n; ++r) images[static_cast<std::size_t>(n + r - 1)] = 2 * r;
  const BraidWord alpha = shuffle_braid(Permutation(std::move(images)));

  Twists target(static_cast<std::size_t>(wide), 0);
  for (int r = 1; r < n; ++r) {
    target[static_cast<std::size_t>(2 * r - 1)] = g.twists()[static_cast<std::size_t>(r)];
  }
  return {Element(spread, RibbonBraid(alpha), leftmost),
          Element(spread, RibbonBraid(BraidWord(wide), std::move(target)), spread)};
}

}  // namespace braidthom
