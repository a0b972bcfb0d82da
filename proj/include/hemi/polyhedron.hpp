#pragma once

#include "hemi/errors.hpp"
#include "hemi/golden.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace hemi {

using Edge = std::pair<int, int>; // always stored with first < second

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

/// A closed polyhedral surface given by exact vertex coordinates and
/// cyclically ordered faces. Edges are derived from face boundaries.
class Polyhedron {
public:
  Polyhedron(std::vector<GVec3> vertices, std::vector<std::vector<int>> faces)
      : vertices_(std::move(vertices)), faces_(std::move(faces)) {
    validate_and_derive_edges();
  }

  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_faces() const { return faces_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  const std::vector<GVec3> &vertices() const { return vertices_; }
  const std::vector<std::vector<int>> &faces() const { return faces_; }
  const std::vector<Edge> &edges() const { return edges_; }

  int euler_characteristic() const {
    return static_cast<int>(num_vertices()) - static_cast<int>(num_edges()) +
           static_cast<int>(num_faces());
  }

  /// Index of the face whose corner set equals `corners` (any order), or -1.
  int find_face(std::vector<int> corners) const {
    std::sort(corners.begin(), corners.end());
    for (std::size_t f = 0; f < faces_.size(); ++f) {
      std::vector<int> c = faces_[f];
      std::sort(c.begin(), c.end());
      if (c == corners) return static_cast<int>(f);
    }
    return -1;
  }

  bool face_has_corner(int f, int v) const {
    const auto &c = faces_[static_cast<std::size_t>(f)];
    return std::find(c.begin(), c.end(), v) != c.end();
  }

private:
  void validate_and_derive_edges() {
    const int n = static_cast<int>(vertices_.size());
    std::map<Edge, int> face_count;
    for (const auto &face : faces_) {
      if (face.size() < 3) throw InvalidPolyhedron("face with fewer than 3 corners");
      std::vector<int> sorted = face;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InvalidPolyhedron("face repeats a corner");
      for (std::size_t i = 0; i < face.size(); ++i) {
        const int u = face[i];
        const int v = face[(i + 1) % face.size()];
        if (u < 0 || u >= n) throw InvalidPolyhedron("face corner out of range");
        ++face_count[make_edge(u, v)];
      }
    }
    for (const auto &[e, count] : face_count) {
      if (count != 2)
        throw InvalidPolyhedron("edge " + std::to_string(e.first) + "-" + std::to_string(e.second) +
                                " lies in " + std::to_string(count) + " faces");
      edges_.push_back(e);
    }
    if (euler_characteristic() != 2) throw InvalidPolyhedron("Euler characteristic is not 2");
  }

  std::vector<GVec3> vertices_;
  std::vector<std::vector<int>> faces_;
  std::vector<Edge> edges_;
};

namespace detail {

// All cyclic shifts of (0, s1 * p, s2 * q), shift-major then signs (+,+), (+,-), (-,+), (-,-).
inline std::vector<GVec3> signed_cyclic_shifts(const GoldenRational &p, const GoldenRational &q) {
  std::vector<GVec3> out;
  for (int shift = 0; shift < 3; ++shift) {
    for (int s1 : {1, -1}) {
      for (int s2 : {1, -1}) {
        GVec3 v{GoldenRational(0), GoldenRational(s1) * p, GoldenRational(s2) * q};
        for (int k = 0; k < shift; ++k) v = v.shifted();
        out.push_back(v);
      }
    }
  }
  return out;
}

} // namespace detail

/// Regular icosahedron with vertices at the cyclic shifts of (0, +-1, +-phi).
/// Faces are counterclockwise when seen from outside.
inline Polyhedron build_icosahedron() {
  auto vertices = detail::signed_cyclic_shifts(GoldenRational(1), GoldenRational::phi());
  std::vector<std::vector<int>> faces = {
      {0, 2, 4},  {0, 5, 2},  {0, 4, 8},  {0, 10, 5}, {0, 8, 10}, {1, 6, 3},  {1, 3, 7},
      {1, 8, 6},  {1, 7, 10}, {1, 10, 8}, {2, 9, 4},  {2, 5, 11}, {2, 11, 9}, {3, 6, 9},
      {3, 11, 7}, {3, 9, 11}, {4, 6, 8},  {4, 9, 6},  {5, 10, 7}, {5, 7, 11}};
  return Polyhedron(std::move(vertices), std::move(faces));
}

/// Regular dodecahedron: the cube vertices (+-1, +-1, +-1) followed by the
/// cyclic shifts of (0, +-1/phi, +-phi), with 1/phi = phi - 1.
inline Polyhedron build_dodecahedron() {
  std::vector<GVec3> vertices;
  for (int a : {1, -1})
    for (int b : {1, -1})
      for (int c : {1, -1})
        vertices.push_back({GoldenRational(a), GoldenRational(b), GoldenRational(c)});
  const GoldenRational inv_phi = GoldenRational::phi() - GoldenRational(1);
  for (const auto &v : detail::signed_cyclic_shifts(inv_phi, GoldenRational::phi())) vertices.push_back(v);
  std::vector<std::vector<int>> faces = {
      {0, 12, 14, 1, 16}, {0, 8, 10, 2, 12},  {0, 16, 18, 4, 8},  {1, 14, 3, 11, 9},
      {1, 9, 5, 18, 16},  {2, 17, 3, 14, 12}, {2, 10, 6, 19, 17}, {3, 17, 19, 7, 11},
      {4, 18, 5, 15, 13}, {4, 13, 6, 10, 8},  {5, 9, 11, 7, 15},  {6, 13, 15, 7, 19}};
  return Polyhedron(std::move(vertices), std::move(faces));
}

/// Pairs every vertex with its negation and every face with the face whose
/// corners are the negated corners. Classes are numbered in order of their
/// smallest member.
struct AntipodalPairing {
  std::vector<int> vertex_class;
  std::vector<int> face_class;
  std::vector<std::array<int, 2>> vertex_members; // per class, ascending
  std::vector<std::array<int, 2>> face_members;

  int num_vertex_classes() const { return static_cast<int>(vertex_members.size()); }
  int num_face_classes() const { return static_cast<int>(face_members.size()); }

  int vertex_partner(int v) const {
    const auto &m = vertex_members[static_cast<std::size_t>(vertex_class[static_cast<std::size_t>(v)])];
    return m[0] == v ? m[1] : m[0];
  }
  int face_partner(int f) const {
    const auto &m = face_members[static_cast<std::size_t>(face_class[static_cast<std::size_t>(f)])];
    return m[0] == f ? m[1] : m[0];
  }
};

inline AntipodalPairing antipodal_pairing(const Polyhedron &p) {
  const auto &verts = p.vertices();
  const int nv = static_cast<int>(verts.size());
  AntipodalPairing out;
  out.vertex_class.assign(static_cast<std::size_t>(nv), -1);
  std::vector<int> negation(static_cast<std::size_t>(nv), -1);
  for (int v = 0; v < nv; ++v) {
    const GVec3 neg = -verts[static_cast<std::size_t>(v)];
    auto it = std::find(verts.begin(), verts.end(), neg);
    if (it == verts.end() || it - verts.begin() == v)
      throw NotCentrallySymmetric("vertex " + std::to_string(v) + " has no antipode");
    negation[static_cast<std::size_t>(v)] = static_cast<int>(it - verts.begin());
  }
  for (int v = 0; v < nv; ++v) {
    if (out.vertex_class[static_cast<std::size_t>(v)] >= 0) continue;
    const int w = negation[static_cast<std::size_t>(v)];
    const int id = static_cast<int>(out.vertex_members.size());
    out.vertex_class[static_cast<std::size_t>(v)] = id;
    out.vertex_class[static_cast<std::size_t>(w)] = id;
    out.vertex_members.push_back({std::min(v, w), std::max(v, w)});
  }

  const int nf = static_cast<int>(p.num_faces());
  out.face_class.assign(static_cast<std::size_t>(nf), -1);
  for (int f = 0; f < nf; ++f) {
    if (out.face_class[static_cast<std::size_t>(f)] >= 0) continue;
    std::vector<int> image;
    for (int v : p.faces()[static_cast<std::size_t>(f)]) image.push_back(negation[static_cast<std::size_t>(v)]);
    const int g = p.find_face(image);
    if (g < 0 || g == f) throw NotCentrallySymmetric("face " + std::to_string(f) + " has no antipode");
    const int id = static_cast<int>(out.face_members.size());
    out.face_class[static_cast<std::size_t>(f)] = id;
    out.face_class[static_cast<std::size_t>(g)] = id;
    out.face_members.push_back({std::min(f, g), std::max(f, g)});
  }
  return out;
}

} // namespace hemi
