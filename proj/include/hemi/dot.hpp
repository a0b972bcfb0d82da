#pragma once

#include "hemi/graph.hpp"

#include <algorithm>
#include <span>
#include <sstream>
#include <string>
#include <vector>

namespace hemi {

/// Graphviz text for g. Vertices are emitted in id order; `labels` (optional)
/// names them, and edges listed in `highlighted` get a dashed red style.
inline std::string dot_export(const Graph &g, std::span<const std::string> labels = {},
                              std::span<const Edge> highlighted = {}) {
  std::ostringstream os;
  os << "graph G {\n";
  for (int v = 0; v < g.order(); ++v) {
    os << "  " << v << " [label=\"" << (static_cast<std::size_t>(v) < labels.size() ? labels[v] : std::to_string(v))
       << "\"";
    if (g.has_sides()) os << ", shape=" << (g.side(v) == Side::Vertex ? "circle" : "box");
    os << "];\n";
  }
  for (const auto &e : g.edges()) {
    os << "  " << e.first << " -- " << e.second;
    if (std::find(highlighted.begin(), highlighted.end(), e) != highlighted.end())
      os << " [style=dashed, color=red]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

} // namespace hemi
