#pragma once

#include <filesystem>
#include <string>

#include "braidthom/element.hpp"

namespace braidthom {

/// Strand diagram of the given representative: range tree on top, domain
/// tree upside down below, one <polyline class="strand"> per strand, one
/// <g class="crossing"> per braid letter (the over-strand redrawn on a
/// white halo), and a <text class="twist"> label for every nonzero twist.
/// Output is byte-identical for identical input.
std::string render_svg(const Element& g);

/// Writes render_svg(g) to `path`. Throws std::runtime_error on I/O failure.
void write_svg(const Element& g, const std::filesystem::path& path);

}  // namespace braidthom
