#include "efglat/dot.hpp"

#include <string_view>

namespace efglat {

namespace {

std::string escaped(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string quoted(std::string_view text) { return "\"" + escaped(text) + "\""; }

}  // namespace

std::string poset_to_dot(const Poset& p) {
  std::string out = "digraph poset {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (std::size_t i = 0; i < p.size(); ++i)
    out += "  n" + std::to_string(i) + " [label=" + quoted(p.label(i)) + "];\n";
  for (auto [a, b] : p.covers())
    out += "  n" + std::to_string(a) + " -> n" + std::to_string(b) + " [arrowhead=none];\n";
  return out + "}\n";
}

std::string space_to_dot(const ConfigSpace& s) {
  std::string out = "digraph configurations {\n  node [shape=box];\n";
  for (std::size_t c = 0; c < s.size(); ++c) {
    out += "  c" + std::to_string(c) + " [label=\"c" + std::to_string(c) + "\\n" +
           escaped(format_shots(s.graph, s.shots[c])) + "\"];\n";
  }
  for (const auto& f : s.successors) {
    out += "  c" + std::to_string(f.from) + " -> c" + std::to_string(f.to) +
           " [label=" + quoted(s.graph.vertices[f.vertex]) + "];\n";
  }
  return out + "}\n";
}

std::string orientation_to_dot(const FiringGraph& g, const Orientation& c) {
  std::string out = "digraph orientation {\n  node [shape=circle];\n";
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    out += "  v" + std::to_string(v) + " [label=" + quoted(g.vertices[v]);
    if (v == g.sink) out += ", shape=square, style=filled, fillcolor=black, fontcolor=white";
    out += "];\n";
  }
  for (std::size_t e = 0; e < g.edges.size(); ++e)
    out += "  v" + std::to_string(tail(g, c, e)) + " -> v" + std::to_string(head(g, c, e)) + ";\n";
  return out + "}\n";
}

}  // namespace efglat
