#pragma once

#include <string>

#include "actad/element.hpp"

namespace actad {

enum class RenderFormat { Ascii, Dot };

// Indented tree for levels 0..3. Each line is one factor (its head literal)
// or a slot: "leaf" at level 2, "free" for an unexpanded level-3 entry.
// DOT output draws level-2 nodes as vertices with point-shaped leaves and
// root stub, and level-3 factors as clusters joined by dashed edges from the
// entry they replace. Throws LevelMismatch for level >= 4.
std::string render(const Element& x, RenderFormat format);

}  // namespace actad
