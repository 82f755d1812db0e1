#pragma once

// Movie scripts, one move per line:
//   switch col=<c> row=<r> letter=<O|X|OX> flavor=<nu|nu_tilde> dir=<fwd|inv>
//   quasistab anchor=<O3|X1> side=<alpha|beta>
//   quasidestab anchor=<O3|X1>
//   diskstab
//   diskdestab
//   renumber <p_1> ... <p_m>
// Columns, rows, marking rows and renumbering entries are 1-indexed. Lines
// starting with # are comments.

#include <string>
#include <string_view>
#include <vector>

#include "unogrid/cobordism.hpp"

namespace unogrid {

/// Throws Error{ParseError} with a line-numbered message.
std::vector<Move> parse_movie(std::string_view text);
std::vector<Move> load_movie(const std::string& path);
std::string serialize_movie(const std::vector<Move>& moves);

/// "O3" -> Marking{O, 2}. Throws ParseError.
Marking parse_marking(std::string_view name);

}  // namespace unogrid
