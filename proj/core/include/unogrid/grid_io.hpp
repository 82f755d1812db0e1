#pragma once

// Grid file formats. Text:
//   # comment
//   n = 5
//   O = 1 2 3 4 5
//   X = 3 4 5 1 2
// Columns are 1-indexed on disk. JSON `{"n":5,"o":[...],"x":[...]}` is accepted too.

#include <string>
#include <string_view>

#include "unogrid/grid.hpp"

namespace unogrid {

/// Throws Error{ParseError} with a line-numbered message; validation errors propagate as-is.
GridDiagram parse_grid(std::string_view text);
GridDiagram load_grid(const std::string& path);

std::string serialize_grid(const GridDiagram& g);
std::string serialize_grid_json(const GridDiagram& g);

}  // namespace unogrid
