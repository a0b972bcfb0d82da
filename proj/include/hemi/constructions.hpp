#pragma once

// Incidence graphs of polyhedra, their antipodal quotients, and the
// wheel-based three-edge extension of the hemi-icosahedron graph.

#include "hemi/errors.hpp"
#include "hemi/graph.hpp"
#include "hemi/polyhedron.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <vector>

namespace hemi {

inline Graph one_skeleton(const Polyhedron &p) {
  Graph g(static_cast<int>(p.num_vertices()));
  for (const auto &[u, v] : p.edges()) g.add_edge(u, v);
  return g;
}

/// Bipartite corner incidence graph. Vertex v keeps id v; face f gets id |V| + f.
inline Graph vertex_face_graph(const Polyhedron &p) {
  const int nv = static_cast<int>(p.num_vertices());
  const int nf = static_cast<int>(p.num_faces());
  Graph g(nv + nf);
  for (int f = 0; f < nf; ++f)
    for (int v : p.faces()[f]) g.add_edge(v, nv + f);
  std::vector<Side> sides(nv, Side::Vertex);
  sides.resize(nv + nf, Side::Face);
  g.set_sides(std::move(sides));
  return g;
}

struct ProjectiveGraph {
  Graph graph;
  AntipodalPairing pairing;

  /// Graph id of a vertex class and of a face class.
  int vertex_class_id(int cls) const { return cls; }
  int face_class_id(int cls) const { return pairing.num_vertex_classes() + cls; }
};

/// Incidence graph of the antipodal quotient: vertex classes first (ids
/// 0..|V|/2-1), then face classes, each in order of smallest member. A class
/// pair is adjacent iff some representative vertex is a corner of some
/// representative face.
inline ProjectiveGraph projective_vertex_face_graph(const Polyhedron &p) {
  ProjectiveGraph out{Graph(), antipodal_pairing(p)};
  const auto &pr = out.pairing;
  const int nvc = pr.num_vertex_classes();
  Graph g(nvc + pr.num_face_classes());
  for (int f = 0; f < static_cast<int>(p.num_faces()); ++f)
    for (int v : p.faces()[f]) g.add_edge(pr.vertex_class[v], nvc + pr.face_class[f]);
  std::vector<Side> sides(nvc, Side::Vertex);
  sides.resize(g.order(), Side::Face);
  g.set_sides(std::move(sides));
  out.graph = std::move(g);
  return out;
}

/// Hub O and rim A..E of a 5-wheel in the icosahedron 1-skeleton.
struct WheelLabeling {
  int hub = -1;
  std::array<int, 5> rim{}; // A, B, C, D, E; consecutive entries adjacent, E adjacent to A

  int O() const { return hub; }
  int A() const { return rim[0]; }
  int B() const { return rim[1]; }
  int C() const { return rim[2]; }
  int D() const { return rim[3]; }
  int E() const { return rim[4]; }
};

/// Hub plus its neighbours ordered along the rim cycle. The rim starts at its
/// smallest id and runs in whichever direction gives the smaller sequence.
inline WheelLabeling find_wheel(const Graph &skeleton, const AntipodalPairing &pairing, int hub) {
  if (hub < 0 || hub >= skeleton.order()) throw NoWheel("hub out of range");
  const std::vector<int> nbrs = skeleton.neighbors(hub);
  if (nbrs.size() != 5) throw NoWheel("hub does not have exactly five neighbours");
  for (int v : nbrs) {
    int inside = 0;
    for (int w : nbrs) inside += skeleton.adjacent(v, w);
    if (inside != 2) throw NoWheel("hub neighbourhood is not a 5-cycle");
  }
  // walk the rim from its smallest vertex
  std::vector<int> walk{nbrs.front()};
  while (walk.size() < 5) {
    const int cur = walk.back();
    const int prev = walk.size() > 1 ? walk[walk.size() - 2] : -1;
    int next = -1;
    for (int w : nbrs)
      if (w != prev && w != cur && skeleton.adjacent(cur, w) && std::find(walk.begin(), walk.end(), w) == walk.end()) {
        next = w;
        break;
      }
    if (next < 0) throw NoWheel("hub neighbourhood is not a single cycle");
    walk.push_back(next);
  }
  if (!skeleton.adjacent(walk.back(), walk.front())) throw NoWheel("hub neighbourhood is not a single cycle");

  std::vector<int> reversed{walk[0], walk[4], walk[3], walk[2], walk[1]};
  const std::vector<int> &best = std::min(walk, reversed);
  WheelLabeling w;
  w.hub = hub;
  std::copy(best.begin(), best.end(), w.rim.begin());

  std::set<int> classes{pairing.vertex_class.at(hub)};
  for (int v : w.rim) classes.insert(pairing.vertex_class.at(v));
  if (classes.size() != 6) throw NoWheel("wheel vertices do not meet six distinct antipodal classes");
  return w;
}

/// The three extra class edges [A][C], [B][O], [D][E] as projective graph ids.
inline std::array<Edge, 3> extra_edges(const AntipodalPairing &pairing, const WheelLabeling &w) {
  auto cls = [&](int v) { return pairing.vertex_class.at(v); };
  return {make_edge(cls(w.A()), cls(w.C())), make_edge(cls(w.B()), cls(w.O())), make_edge(cls(w.D()), cls(w.E()))};
}

/// pi_graph plus the given extra edges; side labels are kept.
inline Graph add_extra_edges(const Graph &pi_graph, std::span<const Edge> extra) {
  Graph g = pi_graph;
  for (const auto &[u, v] : extra) {
    if (g.adjacent(u, v))
      throw EdgeExists("edge " + std::to_string(u) + "-" + std::to_string(v) + " already present");
    g.add_edge(u, v);
  }
  return g;
}

inline Graph build_xi(const Graph &pi_graph, const AntipodalPairing &pairing, const WheelLabeling &w) {
  const auto j = extra_edges(pairing, w);
  return add_extra_edges(pi_graph, j);
}

} // namespace hemi
