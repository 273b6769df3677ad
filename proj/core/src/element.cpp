#include "braidthom/element.hpp"

#include "braidthom/errors.hpp"

namespace braidthom {

Element::Element(Tree l, RibbonBraid r, Tree rt)
    : left(std::move(l)), rb(std::move(r)), right(std::move(rt)) {
  if (left.leaf_count() != rb.strands() || right.leaf_count() != rb.strands()) {
    throw DomainError("element: trees have " + std::to_string(left.leaf_count()) + " and " +
                      std::to_string(right.leaf_count()) + " leaves but the braid has " +
                      std::to_string(rb.strands()) + " strands");
  }
}

bool identical(const Element& a, const Element& b) {
  return a.left == b.left && a.right == b.right && a.twists() == b.twists() &&
         a.braid() == b.braid();
}

Element expand(const Element& g, int k) {
  if (k < 1 || k > g.strands()) {
    throw DomainError("expand: leaf " + std::to_string(k) + " out of range 1.." +
                      std::to_string(g.strands()));
  }
  const auto mk = g.twists()[static_cast<std::size_t>(k - 1)];
  BraidWord b = cable(g.braid(), k);
  b *= BraidWord::power(g.strands() + 1, k, static_cast<int>(mk));
  Twists t = g.twists();
  t.insert(t.begin() + k, mk);
  return Element(g.left.add_caret(rho(g.braid())(k)), RibbonBraid(std::move(b), std::move(t)),
                 g.right.add_caret(k));
}

std::optional<Element> try_reduce_at(const Element& g, int i, const OracleOptions& options) {
  if (!g.right.is_caret_pair(i)) return std::nullopt;
  const auto& m = g.twists();
  const auto mi = m[static_cast<std::size_t>(i - 1)];
  if (m[static_cast<std::size_t>(i)] != mi) return std::nullopt;
  // Strip the s_i^{m_i} that expansion appends below the cable.
  BraidWord stripped = g.braid() * BraidWord::power(g.strands(), i, static_cast<int>(-mi));
  const Permutation p = rho(stripped);
  const int j = p(i);
  if (p(i + 1) != j + 1 || !g.left.is_caret_pair(j)) return std::nullopt;
  BraidWord smaller = delete_strand(stripped, i + 1);
  if (!braid_equal(cable(smaller, i), stripped, options)) return std::nullopt;
  Twists t = m;
  t.erase(t.begin() + i);
  return Element(g.left.remove_caret_pair(j), RibbonBraid(std::move(smaller), std::move(t)),
                 g.right.remove_caret_pair(i));
}

std::vector<int> reduction_sites(const Element& g, const OracleOptions& options) {
  std::vector<int> out;
  for (int i : g.right.caret_pairs()) {
    if (try_reduce_at(g, i, options)) out.push_back(i);
  }
  return out;
}

std::optional<Element> reduce_step(const Element& g, const OracleOptions& options) {
  for (int i : g.right.caret_pairs()) {
    if (auto r = try_reduce_at(g, i, options)) return r;
  }
  return std::nullopt;
}

Element normalize(const Element& g, const OracleOptions& options) {
  Element cur = g;
  while (auto next = reduce_step(cur, options)) cur = std::move(*next);
  return cur;
}

Element normalize_with(const Element& g, const std::function<std::size_t(std::size_t)>& pick,
                       const OracleOptions& options) {
  Element cur = g;
  for (;;) {
    const auto sites = reduction_sites(cur, options);
    if (sites.empty()) return cur;
    const std::size_t choice = pick(sites.size());
    if (choice >= sites.size()) throw DomainError("normalize_with: site choice out of range");
    cur = *try_reduce_at(cur, sites[choice], options);
  }
}

Element mul(const Element& a, const Element& b) {
  const Tree middle = common_refinement(a.right, b.left);
  Element x = a;
  while (int k = x.right.first_leaf_to_refine(middle)) x = expand(x, k);
  Element y = b;
  while (int j = y.left.first_leaf_to_refine(middle)) y = expand(y, rho(y.braid()).inverse()(j));
  return normalize(Element(x.left, rb_mul(x.rb, y.rb), y.right));
}

Element inv(const Element& a) { return Element(a.right, rb_inv(a.rb), a.left); }

Element power(const Element& a, long exponent) {
  Element base = exponent < 0 ? inv(a) : a;
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent)
                                 : static_cast<unsigned long>(exponent);
  Element acc;
  while (e > 0) {
    if (e & 1U) acc = mul(acc, base);
    e >>= 1U;
    if (e > 0) base = mul(base, base);
  }
  return acc;
}

bool equal(const Element& a, const Element& b, const OracleOptions& options) {
  const Element x = normalize(a, options);
  const Element y = normalize(b, options);
  return x.left == y.left && x.right == y.right && x.twists() == y.twists() &&
         braid_equal(x.braid(), y.braid(), options);
}

bool is_identity(const Element& a, const OracleOptions& options) {
  return equal(a, Element::identity(), options);
}

VElement project_to_v(const Element& g) {
  // Every representative of a bV element is untwisted: reduction only
  // drops duplicated twist entries.
  if (!g.rb.untwisted()) throw DomainError("not in bV: element carries twists");
  return v_reduce(VElement(g.left, rho(g.braid()), g.right));
}

}  // namespace braidthom
