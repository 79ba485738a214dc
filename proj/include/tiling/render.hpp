#ifndef TILING_RENDER_HPP
#define TILING_RENDER_HPP

#include <string>

#include "tiling/diagram.hpp"

namespace tiling {

// Chord-diagram schematic as SVG: tiles as circles side by side, edge
// midpoints at fixed angular positions, solid chords for opposing pairs,
// dashed for twisted. Deterministic output.
std::string render_svg(const Diagram& d);

}  // namespace tiling

#endif
