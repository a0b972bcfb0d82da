#pragma once

// Actions of polyhedral symmetries on the incidence graph and on its
// antipodal quotient.

#include "hemi/constructions.hpp"
#include "hemi/errors.hpp"
#include "hemi/permutation.hpp"
#include "hemi/polyhedron.hpp"

#include <set>
#include <vector>

namespace hemi {

/// Extends a symmetry of the 1-skeleton to vertices and faces: acts as rho
/// on vertex ids and sends face |V| + f to the face whose corners are the
/// image corners. Ids match vertex_face_graph.
inline Permutation induced_vertex_face_action(const Permutation &rho, const Polyhedron &p) {
  const int nv = static_cast<int>(p.num_vertices());
  const int nf = static_cast<int>(p.num_faces());
  if (rho.degree() != nv) throw NotASkeletonAutomorphism("permutation degree differs from vertex count");
  const std::set<Edge> edges(p.edges().begin(), p.edges().end());
  for (const auto &[u, v] : p.edges())
    if (!edges.contains(make_edge(rho[u], rho[v])))
      throw NotASkeletonAutomorphism("permutation does not preserve the 1-skeleton");

  std::vector<int> images(nv + nf);
  for (int v = 0; v < nv; ++v) images[v] = rho[v];
  for (int f = 0; f < nf; ++f) {
    std::vector<int> corners;
    for (int v : p.faces()[f]) corners.push_back(rho[v]);
    const int g = p.find_face(corners);
    if (g < 0) throw FaceNotPreserved("image of face " + std::to_string(f) + " is not a face");
    images[nv + f] = nv + g;
  }
  return Permutation(std::move(images));
}

/// Class action [x] -> [phi(x)] of a vertex-face permutation that respects
/// antipodal pairs. Ids match projective_vertex_face_graph.
inline Permutation projectivize_action(const Permutation &phi, const AntipodalPairing &pairing) {
  const int nvc = pairing.num_vertex_classes();
  const int nfc = pairing.num_face_classes();
  const int nv = 2 * nvc;
  if (phi.degree() != nv + 2 * nfc) throw PairingNotRespected("permutation degree does not match the pairing");
  std::vector<int> images(nvc + nfc);
  for (int c = 0; c < nvc; ++c) {
    const auto [a, b] = pairing.vertex_members[c];
    if (phi[a] >= nv || phi[b] >= nv) throw PairingNotRespected("vertex mapped to a face");
    const int ca = pairing.vertex_class[phi[a]];
    if (ca != pairing.vertex_class[phi[b]]) throw PairingNotRespected("antipodal vertices sent to different classes");
    images[c] = ca;
  }
  for (int c = 0; c < nfc; ++c) {
    const auto [a, b] = pairing.face_members[c];
    if (phi[nv + a] < nv || phi[nv + b] < nv) throw PairingNotRespected("face mapped to a vertex");
    const int ca = pairing.face_class[phi[nv + a] - nv];
    if (ca != pairing.face_class[phi[nv + b] - nv]) throw PairingNotRespected("antipodal faces sent to different classes");
    images[nvc + c] = nvc + ca;
  }
  return Permutation(std::move(images));
}

/// The vertex permutation v -> -v.
inline Permutation central_inversion(const AntipodalPairing &pairing) {
  std::vector<int> images(pairing.vertex_class.size());
  for (std::size_t v = 0; v < images.size(); ++v) images[v] = pairing.vertex_partner(static_cast<int>(v));
  return Permutation(std::move(images));
}

} // namespace hemi
