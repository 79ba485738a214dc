#ifndef TILING_JSON_IO_HPP
#define TILING_JSON_IO_HPP

#include <string>

#include "tiling/convert.hpp"
#include "tiling/diagram.hpp"
#include "tiling/enumerate.hpp"

namespace tiling {

// Diagram JSON: {"n":7,"f":2,"pairs":[{"a":[0,1],"b":[3,1],"sign":1},...]}
// with a/b = [label,tile] and pairs in canonical order. Parse errors name
// the offending pair.
Diagram parse_diagram(const std::string& text);
std::string serialize_diagram(const Diagram& d);

// Vertex-set JSON: {"n":7,"f":2,"vertices":[[[0,1,1],[5,2,-1],...],...]}
// with entries [label,tile,sign], cycles canonical and sorted.
VertexSet parse_vertexset(const std::string& text);
std::string serialize_vertexset(const VertexSet& v);

// Either of the two formats, detected by the "pairs"/"vertices" key.
// Returns true if the text held a diagram.
bool parse_diagram_or_vertexset(const std::string& text, Diagram& d, VertexSet& v);

// One record as a single JSON line (no trailing newline).
std::string serialize_record(const TilingRecord& r);

}  // namespace tiling

#endif
