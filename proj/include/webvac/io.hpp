#pragma once

#include <string>
#include <vector>

#include "webvac/matching.hpp"
#include "webvac/tableau.hpp"
#include "webvac/web.hpp"

namespace webvac {

// Bit-exact text formats. Every document is newline-terminated,
// space-separated, base-10, with no other whitespace.

/// line 1: `tableau <n> <k>`, then n lines of k entries.
std::string print_tableau(const StandardTableau& t);
StandardTableau parse_tableau(const std::string& text);

/// line 1: `ncm <n> <N>`, then `arc <color> <i> <j>` sorted by (color, i).
std::string print_ncm(const MulticoloredNcm& m);
MulticoloredNcm parse_ncm(const std::string& text);

/// line 1: `web <n> <N>`; `ivertex <id> <x2> <y2>` sorted by id;
/// `edge <tail> <head> <weight> <flags>` sorted by (tail, head, weight),
/// endpoints written b<label> or i<id>, flags `-` or `u`.
std::string print_web(const WebGraph& w);
WebGraph parse_web(const std::string& text);

/// Printed rank (0-based) -> index into w.edges(); the order print_web uses.
std::vector<int> web_edge_print_order(const WebGraph& w);

}  // namespace webvac
