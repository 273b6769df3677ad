#pragma once

#include <string>
#include <vector>

namespace braidthom {

/// Freely reduced word in the free group F_n. Letter +j is x_j, -j is x_j^-1.
class FreeWord {
 public:
  FreeWord() = default;
  /// Reduces `letters` on construction.
  explicit FreeWord(const std::vector<int>& letters);

  static FreeWord generator(int j) { return FreeWord(std::vector<int>{j}); }

  const std::vector<int>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  /// Appends `other`, cancelling across the seam.
  FreeWord& operator*=(const FreeWord& other);
  FreeWord inverse() const;

  std::string to_string() const;

  friend FreeWord operator*(FreeWord a, const FreeWord& b) { return a *= b; }
  friend bool operator==(const FreeWord&, const FreeWord&) = default;

 private:
  void push(int letter);

  std::vector<int> letters_;
};

}  // namespace braidthom
