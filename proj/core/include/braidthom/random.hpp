#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "braidthom/element.hpp"
#include "braidthom/subgroups.hpp"

namespace braidthom {

struct GenConfig {
  std::uint64_t seed = 0;
  int max_leaves = 12;
  int max_word_len = 16;
  int twist_bound = 3;
  std::optional<Subgroup> constrain;

  /// Throws DomainError unless all bounds are positive.
  void validate() const;
};

/// mt19937_64 keyed by (seed, stream). Bounded draws use rejection on the
/// raw 64-bit output, so sequences match across standard libraries.
class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next() { return engine_(); }
  /// Uniform in [lo, hi]; requires lo <= hi.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool coin() { return (next() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

/// Random tree with exactly `leaves` leaves (uniform split at every node).
Tree random_tree(Rng& rng, int leaves);
/// Word of exactly `length` letters in B_strands; empty when strands == 1.
BraidWord random_braid(Rng& rng, int strands, int length);
/// Pure braid: product of conjugates v s_i^{±2} v^-1, at most `max_length`
/// letters, using only s_1 .. s_{top-1} (so strands above `top` stay put).
BraidWord random_pure_braid(Rng& rng, int strands, int max_length, int top);

/// Random element within cfg's bounds, drawn from the subgroup named by
/// cfg.constrain when set. The result is not normalized unless the
/// construction needs it (bVhat1, Dhat).
Element random_element(const GenConfig& cfg, Rng& rng);
/// Convenience: draws from Rng(cfg.seed, 0).
Element random_element(const GenConfig& cfg);

}  // namespace braidthom
