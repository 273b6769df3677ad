#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "braidthom/ribbon.hpp"
#include "braidthom/tree.hpp"
#include "braidthom/vgroup.hpp"

namespace braidthom {

/// Representative triple [T_-, β(m), T_+] of an element of rV. `left` is
/// the range tree drawn on top, `right` the domain tree drawn upside down
/// below; strands run from leaves of `right` up to leaves of `left`.
/// Elements with zero twists represent bV.
struct Element {
  Tree left;
  RibbonBraid rb;
  Tree right;

  /// The identity on trivial trees, [·, (0), ·].
  Element() = default;
  /// Throws DomainError unless both trees have rb.strands() leaves.
  Element(Tree l, RibbonBraid r, Tree rt);

  static Element identity() { return {}; }

  int strands() const noexcept { return rb.strands(); }
  const BraidWord& braid() const noexcept { return rb.braid; }
  const Twists& twists() const noexcept { return rb.twists; }
};

/// Same trees, same twists, syntactically same braid word.
bool identical(const Element& a, const Element& b);

/// k-th expansion: caret on leaf k of `right`, caret on leaf rho(β)(k) of
/// `left`, braid cable(β, k)·s_k^{m_k}, twist m_k duplicated.
Element expand(const Element& g, int k);

/// Leaf indices i of `right` at which g is an expansion of a smaller
/// triple, ascending.
std::vector<int> reduction_sites(const Element& g, const OracleOptions& options = {});

/// Undoes the i-th expansion, or nullopt when g is not an i-th expansion.
std::optional<Element> try_reduce_at(const Element& g, int i, const OracleOptions& options = {});

/// Reduction at the smallest site; nullopt means irreducible.
std::optional<Element> reduce_step(const Element& g, const OracleOptions& options = {});

/// Reduces until irreducible, always at the smallest available site.
Element normalize(const Element& g, const OracleOptions& options = {});

/// Reduces until irreducible; `pick(count)` chooses which of the currently
/// available sites (0-based into reduction_sites) to reduce next.
Element normalize_with(const Element& g, const std::function<std::size_t(std::size_t)>& pick,
                       const OracleOptions& options = {});

/// Product, normalized. a is stacked above b.
Element mul(const Element& a, const Element& b);
Element inv(const Element& a);
/// a^exponent for any integer exponent.
Element power(const Element& a, long exponent);

/// Normal forms agree: trees and twists exactly, braids in B_n.
bool equal(const Element& a, const Element& b, const OracleOptions& options = {});
bool is_identity(const Element& a, const OracleOptions& options = {});

/// Image in V. Throws DomainError("not in bV") when g carries twists.
VElement project_to_v(const Element& g);

}  // namespace braidthom
