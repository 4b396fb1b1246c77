#pragma once

#include <string>

#include "precolor/graph.hpp"

namespace precolor {

// DIMACS .col format: "p edge <n> <m>" header, "e <u> <v>" edge lines,
// 1-indexed endpoints, "c ..." comment lines. Self-loops, duplicate edges
// and edge-count mismatches are rejected.
Graph load_dimacs(const std::string& text);
std::string save_dimacs(const Graph& g);

// Precoloring file: one "v c" pair per line, 1-indexed vertex, positive
// color; '#' starts a comment. Vertex ids are validated against n.
Precoloring load_precoloring(const std::string& text, int n);
std::string save_precoloring(const Precoloring& d);

// Coloring file: same grammar as the precoloring file, but every vertex
// of the graph must be covered.
Coloring load_coloring(const std::string& text, int n);
std::string save_coloring(const Coloring& f);

Graph load_dimacs_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace precolor
