#pragma once

#include <cstdint>
#include <vector>

#include "braidthom/braid.hpp"

namespace braidthom {

using Twists = std::vector<std::int64_t>;

/// Element β(m_1,…,m_n) of the wreath product B_n ≀ Z. The twist vector
/// sits below the braid and is indexed by bottom positions.
struct RibbonBraid {
  BraidWord braid;
  Twists twists;

  RibbonBraid() : RibbonBraid(BraidWord(1)) {}
  /// Zero twists.
  explicit RibbonBraid(BraidWord b);
  /// Throws DomainError when twists.size() != b.strands().
  RibbonBraid(BraidWord b, Twists t);

  int strands() const noexcept { return braid.strands(); }
  bool untwisted() const;
};

/// Braid parts concatenate; a's twists slide down through b's braid along
/// the strands: result.twists[q] = a.twists[rho(b)(q)] + b.twists[q].
RibbonBraid rb_mul(const RibbonBraid& a, const RibbonBraid& b);

RibbonBraid rb_inv(const RibbonBraid& a);

bool rb_equal(const RibbonBraid& a, const RibbonBraid& b, const OracleOptions& options = {});

}  // namespace braidthom
