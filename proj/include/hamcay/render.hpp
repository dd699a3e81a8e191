#pragma once

#include <cstdint>
#include <string>

#include "hamcay/periodic.hpp"

// Figure emitters in the standard drawing convention: vertex (m,n) at plane
// coordinates (m,n), vertical and internal horizontal edges as segments, and
// each wrap edge as a pair of half-edges labelled with a shared number so
// the exit on the right border can be matched with the entry on the left.
// Wrap labels are assigned top-to-bottom by the wrap edge's right-side level.

namespace hamcay {

enum class RenderFormat : std::uint8_t { Ascii, Svg, Tikz };

struct RenderSpec {
  std::int64_t n_lo = 0;
  std::int64_t n_hi = 0;
  RenderFormat format = RenderFormat::Ascii;
  // Class palette for the vector formats.
  std::string color1 = "#c0392b";
  std::string color2 = "#2980b9";
};

/// Deterministic text document (ASCII art, SVG 1.1 subset, or a standalone
/// TikZ picture) showing all edges whose drawn span lies within the level
/// range: V edges (m,n) with n, n+1 in range, internal H edges with n in
/// range, wrap edges with their right-side level in range (the left half is
/// drawn whenever its own level also fits).  Throws RangeTooSmall when the
/// range has fewer than two levels.
std::string render(const Decomposition& d, const RenderSpec& spec);

/// Test utility: recover the window coloring from an ASCII render.  Returns
/// a decomposition whose colors agree with the source on every edge fully
/// visible in the rendered range (others default to class 1).
Decomposition parse_ascii(const std::string& text, const GklParams& params, std::int64_t period,
                          std::int64_t n_lo, std::int64_t n_hi);

}  // namespace hamcay
