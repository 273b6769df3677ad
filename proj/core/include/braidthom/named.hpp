#pragma once

#include <span>
#include <string_view>

#include "braidthom/element.hpp"

namespace braidthom {

/// Tags accepted by named(): x0, T1caret, g_comm, psi, z_center, t1, t2,
/// h1, h2.
std::span<const std::string_view> named_tags();

/// Normal form of a distinguished element (T1caret is left unreduced).
/// Throws DomainError on an unknown tag.
///   x0       [T2, 1, T1]                 generator of F, chi1 = 1
///   T1caret  [T1, 1, T1]                 the identity drawn on T1, unreduced
///   g_comm   [T2, s1, T2]                commuting-conjugates witness
///   psi      [·, (1), ·]                 half twist of the single ribbon
///   z_center [·, (2), ·]                 full twist, generates the centre
///   t1       [T1, s1^-1 s2^-1 (0,0,-2), T2]
///   t2       psi t1 psi^-1
///   h1       t1 t2 t1
///   h2       psi h1^-1 psi^-1
Element named(std::string_view tag);

/// T1: a caret with a caret on its first leaf; T2: on its second leaf.
Tree tree_t1();
Tree tree_t2();

}  // namespace braidthom
