#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "proxim/graph.hpp"

namespace proxim {

/// Largest order expressible with the one- and four-byte size prefixes.
inline constexpr std::size_t graph6_max_order = 258047;

/// Decodes one graph6 line (no trailing newline; an optional ">>graph6<<"
/// header is accepted). Throws FormatError.
Graph parse_graph6(std::string_view line);

/// Encodes g under its current labelling.
std::string emit_graph6(const Graph& g);

/// Reads one graph per non-empty line; lines starting with '#' are skipped.
/// Error messages carry the 1-based line number.
std::vector<Graph> read_graph6_stream(std::istream& in);

/// Edge-list text: "n m" header, then m lines "u v".
Graph parse_edge_list(std::istream& in);
std::string emit_edge_list(const Graph& g);

} // namespace proxim
