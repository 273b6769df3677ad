#include "braidthom/named.hpp"

#include <array>
#include <string>

#include "braidthom/errors.hpp"

namespace braidthom {
namespace {

constexpr std::array<std::string_view, 9> kTags = {"x0", "T1caret", "g_comm", "psi", "z_center",
                                                    "t1", "t2",      "h1",     "h2"};

Element half_twist() { return Element(Tree(), RibbonBraid(BraidWord(1), {1}), Tree()); }

Element t1() {
  return normalize(Element(tree_t1(),
                           RibbonBraid(BraidWord(3, {{1, -1}, {2, -1}}), {0, 0, -2}),
                           tree_t2()));
}

Element conjugate_by_psi(const Element& g) { return mul(mul(half_twist(), g), inv(half_twist())); }

}  // namespace

Tree tree_t1() { return Tree("11000"); }
Tree tree_t2() { return Tree("10100"); }

std::span<const std::string_view> named_tags() { return kTags; }

Element named(std::string_view tag) {
  if (tag == "x0") return normalize(Element(tree_t2(), RibbonBraid(BraidWord(3)), tree_t1()));
  if (tag == "T1caret") return Element(tree_t1(), RibbonBraid(BraidWord(3)), tree_t1());
  if (tag == "g_comm") {
    return normalize(Element(tree_t2(), RibbonBraid(BraidWord(3, {{1, 1}})), tree_t2()));
  }
  if (tag == "psi") return half_twist();
  if (tag == "z_center") return Element(Tree(), RibbonBraid(BraidWord(1), {2}), Tree());
  if (tag == "t1") return t1();
  if (tag == "t2") return conjugate_by_psi(t1());
  if (tag == "h1") {
    const Element a = t1();
    return mul(mul(a, conjugate_by_psi(a)), a);
  }
  if (tag == "h2") return conjugate_by_psi(inv(named("h1")));
  throw DomainError("unknown named element '" + std::string(tag) + "'");
}

}  // namespace braidthom
