#include "precolor/io.hpp"

#include <fstream>
#include <sstream>

#include "precolor/errors.hpp"

namespace precolor {

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string current;
  std::istringstream in(text);
  while (std::getline(in, current)) {
    if (!current.empty() && current.back() == '\r') current.pop_back();
    lines.push_back(current);
  }
  return lines;
}

bool blank(const std::string& line) {
  return line.find_first_not_of(" \t") == std::string::npos;
}

}  // namespace

Graph load_dimacs(const std::string& text) {
  bool have_header = false;
  int n = 0, declared_edges = 0, seen_edges = 0;
  Graph g;
  int lineno = 0;
  for (const auto& line : split_lines(text)) {
    ++lineno;
    if (blank(line) || line[0] == 'c') continue;
    std::istringstream in(line);
    std::string tag;
    in >> tag;
    if (tag == "p") {
      if (have_header) throw parse_error("dimacs: duplicate header at line " + std::to_string(lineno));
      std::string format;
      if (!(in >> format >> n >> declared_edges) || format != "edge" || n < 0 || declared_edges < 0)
        throw parse_error("dimacs: malformed header at line " + std::to_string(lineno));
      std::string extra;
      if (in >> extra) throw parse_error("dimacs: trailing tokens in header at line " + std::to_string(lineno));
      have_header = true;
      g = Graph(n);
    } else if (tag == "e") {
      if (!have_header) throw parse_error("dimacs: edge line before header at line " + std::to_string(lineno));
      int u = 0, v = 0;
      if (!(in >> u >> v)) throw parse_error("dimacs: malformed edge at line " + std::to_string(lineno));
      std::string extra;
      if (in >> extra) throw parse_error("dimacs: trailing tokens at line " + std::to_string(lineno));
      if (u < 1 || u > n || v < 1 || v > n)
        throw parse_error("dimacs: endpoint out of range at line " + std::to_string(lineno));
      if (u == v) throw parse_error("dimacs: self-loop at line " + std::to_string(lineno));
      if (g.has_edge(u - 1, v - 1))
        throw parse_error("dimacs: duplicate edge at line " + std::to_string(lineno));
      g.add_edge(u - 1, v - 1);
      ++seen_edges;
    } else {
      throw parse_error("dimacs: unrecognized line " + std::to_string(lineno));
    }
  }
  if (!have_header) throw parse_error("dimacs: missing header");
  if (seen_edges != declared_edges)
    throw parse_error("dimacs: header declares " + std::to_string(declared_edges) + " edges, found " +
                      std::to_string(seen_edges));
  return g;
}

std::string save_dimacs(const Graph& g) {
  std::ostringstream out;
  out << "p edge " << g.n() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

namespace {

// Shared "v c" line parser for precoloring and coloring files.
std::map<int, int> load_assignments(const std::string& text, int n, const char* what) {
  std::map<int, int> result;
  int lineno = 0;
  for (auto line : split_lines(text)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (blank(line)) continue;
    std::istringstream in(line);
    int v = 0, c = 0;
    std::string extra;
    if (!(in >> v >> c) || (in >> extra))
      throw parse_error(std::string(what) + ": malformed line " + std::to_string(lineno));
    if (v < 1 || v > n)
      throw parse_error(std::string(what) + ": vertex out of range at line " + std::to_string(lineno));
    if (c < 1) throw parse_error(std::string(what) + ": colors must be positive at line " + std::to_string(lineno));
    if (!result.emplace(v - 1, c).second)
      throw parse_error(std::string(what) + ": vertex repeated at line " + std::to_string(lineno));
  }
  return result;
}

}  // namespace

Precoloring load_precoloring(const std::string& text, int n) {
  return load_assignments(text, n, "precoloring");
}

std::string save_precoloring(const Precoloring& d) {
  std::ostringstream out;
  for (const auto& [v, c] : d) out << v + 1 << ' ' << c << '\n';
  return out.str();
}

Coloring load_coloring(const std::string& text, int n) {
  auto assignments = load_assignments(text, n, "coloring");
  if (static_cast<int>(assignments.size()) != n)
    throw parse_error("coloring: file must assign a color to every vertex");
  Coloring f(static_cast<size_t>(n));
  for (const auto& [v, c] : assignments) f[static_cast<size_t>(v)] = c;
  return f;
}

std::string save_coloring(const Coloring& f) {
  std::ostringstream out;
  for (size_t v = 0; v < f.size(); ++v) out << v + 1 << ' ' << f[v] << '\n';
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw parse_error("cannot write " + path);
  out << content;
}

Graph load_dimacs_file(const std::string& path) { return load_dimacs(read_file(path)); }

}  // namespace precolor
