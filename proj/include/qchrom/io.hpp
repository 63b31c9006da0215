#pragma once

#include <iosfwd>
#include <string>

#include "qchrom/graph.hpp"

namespace qchrom {

// DIMACS-like format: optional "c" comment lines, one "p edge <n> <m>" line,
// then "e <u> <v>" lines with 1-indexed endpoints. The writer emits edges
// sorted with u < v so output is canonical.
Graph read_dimacs(std::istream& in);
void write_dimacs(std::ostream& out, const Graph& g);

// {"n": <int>, "edges": [[u,v], ...]} with 0-indexed endpoints
Graph graph_from_json_text(const std::string& text);
std::string graph_to_json_text(const Graph& g);

// sniff DIMACS vs JSON by the first non-space byte
Graph read_graph_auto(std::istream& in);
Graph load_graph_file(const std::string& path);

// {"c": <int>, "colours": [..], "base": <int, default 0>}; stored colours are
// base..base+c-1 and are shifted down to 0..c-1 on load
ClassicalColouring colouring_from_json_text(const std::string& text);
std::string colouring_to_json_text(const ClassicalColouring& col);
ClassicalColouring load_colouring_file(const std::string& path);

std::string read_stream(std::istream& in);
std::string read_file(const std::string& path);

}  // namespace qchrom
