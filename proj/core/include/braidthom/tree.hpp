#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace braidthom {

/// Finite rooted planar binary tree stored as its preorder bit string:
/// '1' is a caret (internal vertex), '0' is a leaf. Leaves are numbered
/// 1..n from left to right. Equality is syntactic on the encoding.
class Tree {
 public:
  /// The trivial tree (a single leaf).
  Tree();

  /// Throws DomainError when `bits` is not a valid preorder encoding.
  explicit Tree(std::string_view bits);

  static bool is_valid_encoding(std::string_view bits);

  /// Tree with a root caret whose children are `left` and `right`.
  static Tree join(const Tree& left, const Tree& right);

  const std::string& bits() const noexcept { return bits_; }
  int leaf_count() const noexcept { return leaves_; }
  bool is_trivial() const noexcept { return leaves_ == 1; }

  Tree add_caret(int leaf) const;
  Tree remove_caret_pair(int leaf) const;

  /// Sorted leaf indices i such that leaves i and i+1 hang off one caret.
  std::vector<int> caret_pairs() const;
  bool is_caret_pair(int leaf) const;

  /// Edges from the root down to the rightmost leaf.
  int right_depth() const;

  /// Subtrees under the root's children. The trivial tree returns itself.
  Tree left_subtree() const;
  Tree right_subtree() const;

  /// First leaf of this tree that is an internal vertex of `target`, or 0
  /// when the two trees coincide. `target` must contain this tree as a
  /// rooted prefix.
  int first_leaf_to_refine(const Tree& target) const;

  friend bool operator==(const Tree&, const Tree&) = default;
  friend auto operator<=>(const Tree& a, const Tree& b) { return a.bits_ <=> b.bits_; }

 private:
  std::string bits_;
  int leaves_;
};

/// Smallest tree containing both arguments as rooted prefixes.
Tree common_refinement(const Tree& a, const Tree& b);

}  // namespace braidthom
