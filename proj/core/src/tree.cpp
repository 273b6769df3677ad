#include "braidthom/tree.hpp"

#include <algorithm>
#include <string>

#include "braidthom/errors.hpp"

namespace braidthom {
namespace {

// One past the end of the subtree whose root sits at `pos`.
std::size_t subtree_end(std::string_view bits, std::size_t pos) {
  int open = 1;
  while (open > 0) {
    open += bits[pos] == '1' ? 1 : -1;
    ++pos;
  }
  return pos;
}

// Position in `bits` of the `leaf`th '0' (1-based).
std::size_t leaf_position(std::string_view bits, int leaf) {
  int seen = 0;
  for (std::size_t p = 0; p < bits.size(); ++p) {
    if (bits[p] == '0' && ++seen == leaf) return p;
  }
  return std::string_view::npos;
}

}  // namespace

Tree::Tree() : bits_("0"), leaves_(1) {}

Tree::Tree(std::string_view bits) {
  if (!is_valid_encoding(bits)) {
    throw DomainError("invalid tree encoding '" + std::string(bits) + "'");
  }
  bits_ = std::string(bits);
  leaves_ = static_cast<int>(std::count(bits_.begin(), bits_.end(), '0'));
}

bool Tree::is_valid_encoding(std::string_view bits) {
  if (bits.empty()) return false;
  int balance = 1;
  for (std::size_t p = 0; p < bits.size(); ++p) {
    const char c = bits[p];
    if (c != '0' && c != '1') return false;
    balance += c == '1' ? 1 : -1;
    if (balance == 0) return p + 1 == bits.size();
  }
  return false;
}

Tree Tree::join(const Tree& left, const Tree& right) {
  return Tree("1" + left.bits_ + right.bits_);
}

Tree Tree::add_caret(int leaf) const {
  if (leaf < 1 || leaf > leaves_) {
    throw DomainError("add_caret: leaf " + std::to_string(leaf) + " out of range 1.." +
                      std::to_string(leaves_));
  }
  std::string out = bits_;
  out.replace(leaf_position(bits_, leaf), 1, "100");
  return Tree(out);
}

bool Tree::is_caret_pair(int leaf) const {
  if (leaf < 1 || leaf >= leaves_) return false;
  const std::size_t p = leaf_position(bits_, leaf);
  return p > 0 && bits_[p - 1] == '1' && bits_[p + 1] == '0';
}

Tree Tree::remove_caret_pair(int leaf) const {
  if (!is_caret_pair(leaf)) {
    throw DomainError("remove_caret_pair: leaves " + std::to_string(leaf) + " and " +
                      std::to_string(leaf + 1) + " are not siblings in " + bits_);
  }
  std::string out = bits_;
  out.replace(leaf_position(bits_, leaf) - 1, 3, "0");
  return Tree(out);
}

std::vector<int> Tree::caret_pairs() const {
  std::vector<int> out;
  int leaf = 0;
  for (std::size_t p = 0; p < bits_.size(); ++p) {
    if (bits_[p] != '0') continue;
    ++leaf;
    if (p > 0 && bits_[p - 1] == '1' && p + 1 < bits_.size() && bits_[p + 1] == '0') {
      out.push_back(leaf);
    }
  }
  return out;
}

int Tree::right_depth() const {
  int depth = 0;
  std::size_t pos = 0;
  while (bits_[pos] == '1') {
    pos = subtree_end(bits_, pos + 1);
    ++depth;
  }
  return depth;
}

Tree Tree::left_subtree() const {
  if (is_trivial()) return *this;
  return Tree(std::string_view(bits_).substr(1, subtree_end(bits_, 1) - 1));
}

Tree Tree::right_subtree() const {
  if (is_trivial()) return *this;
  return Tree(std::string_view(bits_).substr(subtree_end(bits_, 1)));
}

int Tree::first_leaf_to_refine(const Tree& target) const {
  const std::string& t = target.bits_;
  std::size_t p = 0;
  std::size_t q = 0;
  int leaf = 0;
  while (p < bits_.size()) {
    if (q >= t.size()) throw DomainError("first_leaf_to_refine: target is not a refinement");
    if (bits_[p] == '0') {
      ++leaf;
      if (t[q] == '1') return leaf;
      ++p;
      ++q;
    } else if (t[q] == '1') {
      ++p;
      ++q;
    } else {
      throw DomainError("first_leaf_to_refine: target is not a refinement");
    }
  }
  return 0;
}

Tree common_refinement(const Tree& a, const Tree& b) {
  if (a.is_trivial()) return b;
  if (b.is_trivial()) return a;
  return Tree::join(common_refinement(a.left_subtree(), b.left_subtree()),
                    common_refinement(a.right_subtree(), b.right_subtree()));
}

}  // namespace braidthom
