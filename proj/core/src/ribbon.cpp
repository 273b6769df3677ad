#include "braidthom/ribbon.hpp"

#include <algorithm>

#include "braidthom/errors.hpp"

namespace braidthom {

RibbonBraid::RibbonBraid(BraidWord b)
    : braid(std::move(b)), twists(static_cast<std::size_t>(braid.strands()), 0) {}

RibbonBraid::RibbonBraid(BraidWord b, Twists t) : braid(std::move(b)), twists(std::move(t)) {
  if (twists.size() != static_cast<std::size_t>(braid.strands())) {
    throw DomainError("twist vector has " + std::to_string(twists.size()) + " entries for " +
                      std::to_string(braid.strands()) + " strands");
  }
}

bool RibbonBraid::untwisted() const {
  return std::all_of(twists.begin(), twists.end(), [](std::int64_t m) { return m == 0; });
}

RibbonBraid rb_mul(const RibbonBraid& a, const RibbonBraid& b) {
  if (a.strands() != b.strands()) throw DomainError("rb_mul: strand counts differ");
  const Permutation p = rho(b.braid);
  Twists t(b.twists.size());
  for (int q = 1; q <= b.strands(); ++q) {
    t[static_cast<std::size_t>(q - 1)] =
        a.twists[static_cast<std::size_t>(p(q) - 1)] + b.twists[static_cast<std::size_t>(q - 1)];
  }
  return RibbonBraid(a.braid * b.braid, std::move(t));
}

RibbonBraid rb_inv(const RibbonBraid& a) {
  // (β(m))^-1 = (-m)β^-1, and (-m) slides below β^-1.
  BraidWord inv = a.braid.inverse();
  const Permutation p = rho(inv);
  Twists t(a.twists.size());
  for (int q = 1; q <= a.strands(); ++q) {
    t[static_cast<std::size_t>(q - 1)] = -a.twists[static_cast<std::size_t>(p(q) - 1)];
  }
  return RibbonBraid(std::move(inv), std::move(t));
}

bool rb_equal(const RibbonBraid& a, const RibbonBraid& b, const OracleOptions& options) {
  if (a.strands() != b.strands()) throw DomainError("rb_equal: strand counts differ");
  return a.twists == b.twists && braid_equal(a.braid, b.braid, options);
}

}  // namespace braidthom
