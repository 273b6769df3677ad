#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "braidthom/free_word.hpp"
#include "braidthom/permutation.hpp"

namespace braidthom {

/// Artin generator s_index^sign. s_k crosses the strand at position k under
/// the strand at position k+1 (positions counted below the crossing).
struct Letter {
  int index;
  int sign;

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Word in the Artin generators of B_n. The leftmost letter is topmost in
/// the strand diagram, so concatenation is the group product and the
/// rightmost letter acts first on bottom positions.
class BraidWord {
 public:
  BraidWord() : BraidWord(1) {}
  explicit BraidWord(int strands);
  /// Throws DomainError on an index outside 1..strands-1 or a sign not ±1.
  BraidWord(int strands, std::vector<Letter> letters);

  /// s_i^exponent as a word of |exponent| letters.
  static BraidWord power(int strands, int index, int exponent);

  int strands() const noexcept { return strands_; }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  BraidWord inverse() const;
  BraidWord freely_reduced() const;
  /// Same letters read in B_strands; strands must not drop below what the
  /// letters need.
  BraidWord with_strands(int strands) const;

  /// Concatenation, freely reduced across the seam.
  BraidWord& operator*=(const BraidWord& other);
  friend BraidWord operator*(BraidWord a, const BraidWord& b) { return a *= b; }

  /// Syntactic equality (same strand count, same letters).
  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_;
  std::vector<Letter> letters_;
};

/// Strand permutation: rho(w)(k) is the top position of the strand starting
/// at bottom position k. rho(uv) = rho(u) ∘ rho(v).
Permutation rho(const BraidWord& w);

int exponent_sum(const BraidWord& w);

/// Symmetric matrix indexed by bottom starting positions (0-based); entry
/// (a,b) is the signed count of crossings between those two strands, i.e.
/// twice the linking number for pure braids.
using LinkingMatrix = std::vector<std::vector<int>>;
LinkingMatrix linking_matrix(const BraidWord& w);

/// Splits the strand starting at bottom position k into two parallel
/// strands occupying slots k, k+1 at the bottom.
BraidWord cable(const BraidWord& w, int k);

/// Drops the strand starting at bottom position k.
BraidWord delete_strand(const BraidWord& w, int k);

bool is_pure(const BraidWord& w);

/// True iff w lies in the copy of B_{n-1} braiding only the first n-1 strands.
bool is_hat(const BraidWord& w);

/// Positive word with rho(result) = p, built by bubble sort.
BraidWord shuffle_braid(const Permutation& p);

struct OracleOptions {
  /// Cap on the total letter count of Artin images, per call.
  std::size_t free_word_budget = std::size_t{1} << 22;
  /// When the Artin budget runs out, settle the question by handle
  /// reduction instead of throwing ResourceError.
  bool handle_fallback = true;
};

/// Images of x_1..x_n under the Artin automorphism of w, freely reduced.
/// Throws ResourceError once the summed image length exceeds `budget`.
std::vector<FreeWord> artin_images(const BraidWord& w, std::size_t budget);

/// Decides u = v in B_n through the Artin action on F_n (after cheap
/// permutation, exponent-sum and linking rejections).
bool braid_equal(const BraidWord& u, const BraidWord& v, const OracleOptions& options = {});

/// Dehornoy handle reduction; the result is empty iff w is trivial.
BraidWord handle_reduce(const BraidWord& w);

bool handle_equal(const BraidWord& u, const BraidWord& v);

/// "s1^-1 s2 s1^3" style; "e" for the empty word.
std::string to_string(const BraidWord& w);

}  // namespace braidthom
