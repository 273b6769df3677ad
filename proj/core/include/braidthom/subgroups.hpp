#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "braidthom/element.hpp"

namespace braidthom {

enum class Subgroup { F, bV, bF, bP, bT, bVhat, bVhat1, Dhat };

inline constexpr Subgroup kAllSubgroups[] = {Subgroup::F,     Subgroup::bV,    Subgroup::bF,
                                             Subgroup::bP,    Subgroup::bT,    Subgroup::bVhat,
                                             Subgroup::bVhat1, Subgroup::Dhat};

std::string_view name(Subgroup s);
std::optional<Subgroup> parse_subgroup(std::string_view text);

/// Membership of g in a subgroup of rV.
///   bV      no twists
///   F       bV with trivial braid
///   bF      bV with pure braid
///   bP      bV and trivial image in V
///   bT      bV with a rotation as strand permutation
///   bVhat   bV and the last strand unbraided
///   bVhat1  bVhat with reduced trees of right depth at most 1
///   Dhat    bVhat in the kernel of chi1
bool member(const Element& g, Subgroup s);

/// Right depth of the range tree minus right depth of the domain tree.
/// Throws DomainError("not in bVhat").
std::int64_t chi1(const Element& g);

/// chi1(ψ h ψ^-1). Throws DomainError unless ψ h ψ^-1 lies in bVhat.
std::int64_t chi0(const Element& h);

/// bV -> bVhat(1): hangs both trees off a new root caret as left child and
/// adds an unbraided strand on the right. Throws DomainError for twisted g.
Element embed_hat1(const Element& g);

}  // namespace braidthom
