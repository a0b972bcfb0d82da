#pragma once

#include "hemi/errors.hpp"
#include "hemi/polyhedron.hpp"

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hemi {

/// Which side of a vertex-face incidence graph a vertex came from.
enum class Side : std::uint8_t { Vertex, Face };

/// Simple undirected graph on vertices 0..n-1 with a bitset adjacency matrix.
class Graph {
public:
  Graph() = default;
  explicit Graph(int n) : n_(n), words_((n + 63) / 64), rows_(static_cast<std::size_t>(n) * words_, 0) {}

  int order() const { return n_; }
  int size() const { return num_edges_; }

  bool adjacent(int u, int v) const { return (row(u)[v >> 6] >> (v & 63)) & 1u; }

  void add_edge(int u, int v) {
    if (u == v) throw error("Graph: loops are not allowed");
    if (adjacent(u, v)) return;
    set_bit(u, v);
    set_bit(v, u);
    ++num_edges_;
  }

  void remove_edge(int u, int v) {
    if (!adjacent(u, v)) return;
    clear_bit(u, v);
    clear_bit(v, u);
    --num_edges_;
  }

  int degree(int v) const {
    int d = 0;
    for (auto w : row(v)) d += std::popcount(w);
    return d;
  }

  std::vector<int> neighbors(int v) const {
    std::vector<int> out;
    for (int w = 0; w < n_; ++w)
      if (adjacent(v, w)) out.push_back(w);
    return out;
  }

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v)
        if (adjacent(u, v)) out.push_back({u, v});
    return out;
  }

  std::span<const std::uint64_t> row(int v) const {
    return {rows_.data() + static_cast<std::size_t>(v) * words_, static_cast<std::size_t>(words_)};
  }

  bool has_sides() const { return !sides_.empty(); }
  Side side(int v) const { return sides_.at(static_cast<std::size_t>(v)); }
  const std::vector<Side> &sides() const { return sides_; }
  void set_sides(std::vector<Side> sides) {
    if (!sides.empty() && static_cast<int>(sides.size()) != n_) throw error("Graph: side label count mismatch");
    sides_ = std::move(sides);
  }

  /// The graph with vertex v renamed to image[v]. Side labels follow their vertices.
  Graph relabeled(std::span<const int> image) const {
    Graph g(n_);
    for (const auto &[u, v] : edges()) g.add_edge(image[u], image[v]);
    if (has_sides()) {
      std::vector<Side> s(sides_.size());
      for (int v = 0; v < n_; ++v) s[image[v]] = sides_[v];
      g.sides_ = std::move(s);
    }
    return g;
  }

  /// Equality of the edge relation; side labels are provenance and do not count.
  friend bool operator==(const Graph &a, const Graph &b) { return a.n_ == b.n_ && a.rows_ == b.rows_; }

private:
  void set_bit(int u, int v) { rows_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63); }
  void clear_bit(int u, int v) {
    rows_[static_cast<std::size_t>(u) * words_ + (v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
  }

  int n_ = 0;
  int words_ = 0;
  int num_edges_ = 0;
  std::vector<std::uint64_t> rows_;
  std::vector<Side> sides_;
};

inline bool is_connected(const Graph &g) {
  if (g.order() == 0) return true;
  std::vector<char> seen(g.order(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(v))
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == g.order();
}

/// Two-colouring of g if it is bipartite.
inline std::optional<std::vector<int>> bipartition(const Graph &g) {
  std::vector<int> colour(g.order(), -1);
  for (int s = 0; s < g.order(); ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v)) {
        if (colour[w] < 0) {
          colour[w] = 1 - colour[v];
          stack.push_back(w);
        } else if (colour[w] == colour[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return colour;
}

inline bool is_bipartite(const Graph &g) { return bipartition(g).has_value(); }

/// True iff `perm` maps the edge relation of g onto itself.
inline bool is_automorphism(const Graph &g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.order()) return false;
  for (const auto &[u, v] : g.edges())
    if (!g.adjacent(perm[u], perm[v])) return false;
  return true;
}

} // namespace hemi
