#pragma once

#include <string>
#include <vector>

namespace braidthom {

/// Bijection on {1..n}. For a braid, p(k) is the top position of the strand
/// that starts at bottom position k.
class Permutation {
 public:
  Permutation() = default;

  /// `images[k-1]` is the image of k. Throws DomainError unless bijective.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  /// Swaps i and i+1.
  static Permutation adjacent_transposition(int n, int i);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int k) const { return images_[static_cast<std::size_t>(k - 1)]; }
  const std::vector<int>& images() const noexcept { return images_; }

  Permutation inverse() const;
  bool is_identity() const;
  /// True iff the map is k -> k + r mod n for some r (identity included).
  bool is_rotation() const;

  /// Permutation on n+1 points obtained by splitting point k into the
  /// adjacent pair k, k+1, which maps onto p(k), p(k)+1.
  Permutation doubled(int k) const;

  /// Permutation on n-1 points obtained by dropping k and its image.
  Permutation removed(int k) const;

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// (f ∘ g)(k) = f(g(k)).
Permutation compose(const Permutation& f, const Permutation& g);

}  // namespace braidthom
