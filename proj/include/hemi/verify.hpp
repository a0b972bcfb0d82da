#pragma once

// End-to-end checks of the hemi-icosahedron constructions. Each claim is a
// sequence of numbered sub-checks; every sub-check runs and records its own
// evidence, and the report names the first one that failed.

#include "hemi/actions.hpp"
#include "hemi/automorphisms.hpp"
#include "hemi/constructions.hpp"
#include "hemi/graph6.hpp"
#include "hemi/group_analysis.hpp"
#include "hemi/polyhedron.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace hemi {

using Json = nlohmann::ordered_json;

inline Json to_json(const Permutation &p) { return p.images(); }

inline Json to_json(const std::vector<Permutation> &ps) {
  Json a = Json::array();
  for (const auto &p : ps) a.push_back(to_json(p));
  return a;
}

inline Json to_json(const GroupName &name) {
  Json j;
  j["name"] = name.to_string();
  if (name.evidence) {
    const auto &ev = *name.evidence;
    j["order"] = ev.order;
    Json hist = Json::object();
    for (const auto &[o, c] : ev.histogram) hist[std::to_string(o)] = c;
    j["element_orders"] = hist;
    j["abelian"] = ev.abelian;
    j["center_order"] = ev.center_order;
    j["derived_order"] = ev.derived_order;
    if (ev.simple) j["simple"] = *ev.simple;
    if (ev.derived_simple) j["derived_simple"] = *ev.derived_simple;
  }
  return j;
}

/// Generators plus claimed order; a loader re-verifies the order.
inline Json to_json(const PermGroup &g) {
  Json j;
  j["degree"] = g.degree();
  j["order"] = g.order().str();
  j["generators"] = to_json(g.generators());
  return j;
}

struct SubCheck {
  int index = 0;
  std::string name;
  bool passed = false;
  Json evidence = Json::object();
};

struct VerificationReport {
  std::string claim;
  std::vector<SubCheck> checks;
  double timing_ms = 0.0;

  bool verified() const {
    return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const SubCheck &c) { return c.passed; });
  }

  std::optional<int> first_failure() const {
    for (const auto &c : checks)
      if (!c.passed) return c.index;
    return std::nullopt;
  }

  const SubCheck &check(int index) const { return checks.at(static_cast<std::size_t>(index - 1)); }

  Json to_json() const {
    Json j;
    j["schema"] = 1;
    j["claim"] = claim;
    j["status"] = verified() ? "verified" : "failed";
    if (auto f = first_failure()) j["first_failure"] = *f;
    else j["first_failure"] = nullptr;
    Json cs = Json::array();
    for (const auto &c : checks) {
      Json cj;
      cj["index"] = c.index;
      cj["name"] = c.name;
      cj["passed"] = c.passed;
      cj["evidence"] = c.evidence;
      cs.push_back(std::move(cj));
    }
    j["checks"] = std::move(cs);
    j["timing_ms"] = timing_ms;
    return j;
  }
};

namespace detail {

class ReportBuilder {
public:
  explicit ReportBuilder(std::string claim) : start_(std::chrono::steady_clock::now()) { report_.claim = std::move(claim); }

  // body fills evidence and returns pass/fail; an exception fails the check.
  void check(std::string name, const std::function<bool(Json &)> &body) {
    SubCheck c;
    c.index = static_cast<int>(report_.checks.size()) + 1;
    c.name = std::move(name);
    try {
      c.passed = body(c.evidence);
    } catch (const std::exception &e) {
      c.passed = false;
      c.evidence["exception"] = e.what();
    }
    report_.checks.push_back(std::move(c));
  }

  VerificationReport finish() {
    report_.timing_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    return std::move(report_);
  }

private:
  VerificationReport report_;
  std::chrono::steady_clock::time_point start_;
};

inline std::set<Edge> edge_image(const Permutation &p, std::span<const Edge> edges) {
  std::set<Edge> out;
  for (const auto &[u, v] : edges) out.insert(make_edge(p[u], p[v]));
  return out;
}

} // namespace detail

/// What `hemi aut` prints for a graph.
struct AutomorphismSummary {
  BigInt order;
  GroupName name; // Unknown when the group is too large to identify
  std::vector<Permutation> generators;

  std::string headline() const { return "order " + order.str() + ", " + name.to_string(); }
};

inline AutomorphismSummary summarize_automorphisms(const Graph &g) {
  const PermGroup aut = automorphism_group(g);
  AutomorphismSummary s{aut.order(), GroupName{}, aut.generators()};
  if (aut.order() <= kEnumerationBound) s.name = identify_group(aut);
  return s;
}

/// Rotation group of a centrally symmetric polyhedron acting on its vertices:
/// the derived subgroup of the full 1-skeleton automorphism group.
inline PermGroup rotation_group(const Polyhedron &p) { return derived_subgroup(automorphism_group(one_skeleton(p))); }

/// The map rho -> [x] -> [rho(x)] from skeleton symmetries to permutations
/// of the projective vertex-face graph.
inline Permutation projective_image(const Permutation &rho, const Polyhedron &p, const AntipodalPairing &pairing) {
  return projectivize_action(induced_vertex_face_action(rho, p), pairing);
}

struct Prop1Options {
  std::optional<Graph> pi_override;         // graph under test instead of the constructed one
  bool map_full_symmetry_group = false;     // push Aut(skeleton) instead of the rotations
};

inline VerificationReport verify_prop1(const Prop1Options &opt = {}) {
  detail::ReportBuilder rb("prop1");
  const Polyhedron ico = build_icosahedron();
  const ProjectiveGraph proj = projective_vertex_face_graph(ico);
  const Graph pi = opt.pi_override ? *opt.pi_override : proj.graph;
  const PermGroup skeleton_group = automorphism_group(one_skeleton(ico));
  const PermGroup rotations = derived_subgroup(skeleton_group);
  const std::vector<Permutation> pushed = (opt.map_full_symmetry_group ? skeleton_group : rotations).elements();

  rb.check("projective graph has 16 vertices split 6 + 10 with degrees 5 and 3", [&](Json &ev) {
    std::set<int> vdeg, fdeg;
    int nv = 0, nf = 0;
    for (int v = 0; v < pi.order(); ++v) {
      if (proj.graph.side(v) == Side::Vertex) {
        ++nv;
        vdeg.insert(pi.degree(v));
      } else {
        ++nf;
        fdeg.insert(pi.degree(v));
      }
    }
    ev["vertices"] = pi.order();
    ev["edges"] = pi.size();
    ev["vertex_side"] = nv;
    ev["face_side"] = nf;
    ev["vertex_side_degrees"] = vdeg;
    ev["face_side_degrees"] = fdeg;
    ev["graph6"] = graph6_encode(pi);
    return pi.order() == 16 && nv == 6 && nf == 10 && vdeg == std::set<int>{5} && fdeg == std::set<int>{3} &&
           is_bipartite(pi);
  });

  std::vector<Permutation> images;
  rb.check("every pushed rotation is an automorphism and the map is injective", [&](Json &ev) {
    int bad = 0;
    for (const auto &rho : pushed) {
      Permutation phi = projective_image(rho, ico, proj.pairing);
      if (!is_automorphism(pi, phi.span())) ++bad;
      images.push_back(std::move(phi));
    }
    std::set<Permutation> distinct(images.begin(), images.end());
    ev["pushed"] = pushed.size();
    ev["distinct_images"] = distinct.size();
    ev["non_automorphisms"] = bad;
    return bad == 0 && distinct.size() == pushed.size() && pushed.size() == 60;
  });

  std::optional<PermGroup> aut;
  rb.check("automorphism group has order 60", [&](Json &ev) {
    aut = automorphism_group(pi);
    ev["group"] = to_json(*aut);
    return aut->order() == 60;
  });

  rb.check("vertex classes form one orbit of size 6 with stabilizer of order 10", [&](Json &ev) {
    if (!aut) return false;
    const auto vs = aut->orbit_and_stabilizer(0);
    const auto fs = aut->orbit_and_stabilizer(6);
    ev["vertex_orbit"] = vs.orbit;
    ev["vertex_stabilizer_order"] = vs.stabilizer_order.str();
    ev["face_orbit"] = fs.orbit;
    ev["face_stabilizer_order"] = fs.stabilizer_order.str();
    ev["bound"] = "6 * 10 = 60";
    return vs.orbit.size() == 6 && vs.stabilizer_order == 10 && fs.orbit.size() == 10 && fs.stabilizer_order == 6 &&
           BigInt(vs.orbit.size()) * vs.stabilizer_order == aut->order();
  });

  rb.check("automorphism group identifies as A5", [&](Json &ev) {
    if (!aut) return false;
    const GroupName name = identify_group(*aut);
    ev["identified"] = to_json(name);
    return name == GroupName::of(GroupTag::A5);
  });

  rb.check("image of the rotations equals the automorphism group", [&](Json &ev) {
    if (!aut) return false;
    const auto elems = aut->elements();
    std::set<Permutation> img(images.begin(), images.end());
    const bool equal = img == std::set<Permutation>(elems.begin(), elems.end());
    ev["image_size"] = img.size();
    ev["group_order"] = elems.size();
    ev["equal"] = equal;
    return equal;
  });

  return rb.finish();
}

struct Prop2Options {
  int hub = 0;
  std::optional<std::array<Edge, 3>> extra_override; // class edges in projective ids
  std::optional<Permutation> h2_override;             // vertex permutation
};

/// The unique order-3 rotation with h(O) = C that maps face {O, C, D} to itself.
inline std::vector<Permutation> face_rotation_candidates(const std::vector<Permutation> &rotations,
                                                         const WheelLabeling &w) {
  std::vector<Permutation> out;
  const std::set<int> face{w.O(), w.C(), w.D()};
  for (const auto &r : rotations) {
    if (r.order() != 3 || r[w.O()] != w.C()) continue;
    if (std::set<int>{r[w.O()], r[w.C()], r[w.D()]} == face) out.push_back(r);
  }
  return out;
}

/// The nontrivial rotations mapping edge {O, B} to itself.
inline std::vector<Permutation> edge_rotation_candidates(const std::vector<Permutation> &rotations,
                                                         const WheelLabeling &w) {
  std::vector<Permutation> out;
  for (const auto &r : rotations) {
    if (r.is_identity()) continue;
    if (make_edge(r[w.O()], r[w.B()]) == make_edge(w.O(), w.B())) out.push_back(r);
  }
  return out;
}

inline VerificationReport verify_prop2(const Prop2Options &opt = {}) {
  detail::ReportBuilder rb("prop2");
  const Polyhedron ico = build_icosahedron();
  const ProjectiveGraph proj = projective_vertex_face_graph(ico);
  const Graph skeleton = one_skeleton(ico);
  const std::vector<Permutation> rotations = rotation_group(ico).elements();

  std::optional<WheelLabeling> wheel;
  rb.check("wheel hub and rim meet all six vertex classes", [&](Json &ev) {
    wheel = find_wheel(skeleton, proj.pairing, opt.hub);
    ev["O"] = wheel->O();
    ev["rim_ABCDE"] = wheel->rim;
    std::vector<int> classes{proj.pairing.vertex_class[wheel->O()]};
    for (int v : wheel->rim) classes.push_back(proj.pairing.vertex_class[v]);
    ev["classes"] = classes;
    return std::set<int>(classes.begin(), classes.end()).size() == 6;
  });
  if (!wheel) return rb.finish();

  const std::array<Edge, 3> j_edges = opt.extra_override ? *opt.extra_override : extra_edges(proj.pairing, *wheel);
  std::optional<Graph> xi;
  rb.check("extended graph has 33 edges, the extra ones between vertex classes", [&](Json &ev) {
    xi = add_extra_edges(proj.graph, j_edges);
    Json jj = Json::array();
    bool vertex_side = true;
    for (const auto &[u, v] : j_edges) {
      jj.push_back({u, v});
      vertex_side = vertex_side && proj.graph.side(u) == Side::Vertex && proj.graph.side(v) == Side::Vertex;
    }
    ev["extra_edges"] = jj;
    ev["edges"] = xi->size();
    ev["graph6"] = graph6_encode(*xi);
    return xi->size() == 33 && vertex_side;
  });

  std::optional<Permutation> h1, h2;
  std::optional<PermGroup> h_group;
  rb.check("face and edge rotations generate A4", [&](Json &ev) {
    const auto c1 = face_rotation_candidates(rotations, *wheel);
    ev["face_rotation_candidates"] = c1.size();
    if (c1.size() != 1) return false;
    h1 = c1.front();
    if (opt.h2_override) {
      h2 = *opt.h2_override;
    } else {
      const auto c2 = edge_rotation_candidates(rotations, *wheel);
      ev["edge_rotation_candidates"] = c2.size();
      if (c2.size() != 1) return false;
      h2 = c2.front();
    }
    ev["h1"] = to_json(*h1);
    ev["h1_direction"] = "O->C";
    ev["h2"] = to_json(*h2);
    h_group = PermGroup(ico.num_vertices(), {*h1, *h2});
    const GroupName name = identify_group(*h_group);
    ev["order"] = h_group->order().str();
    ev["identified"] = to_json(name);
    return h_group->order() == 12 && name == GroupName::of(GroupTag::A4);
  });

  rb.check("h1 cycles the extra edges, h2 fixes each of them", [&](Json &ev) {
    if (!h1 || !h2) return false;
    const Permutation p1 = projective_image(*h1, ico, proj.pairing);
    const Permutation p2 = projective_image(*h2, ico, proj.pairing);
    auto position = [&](const Edge &e) {
      const auto it = std::find(j_edges.begin(), j_edges.end(), e);
      return it == j_edges.end() ? -1 : static_cast<int>(it - j_edges.begin());
    };
    std::vector<int> act1, act2;
    for (const auto &[u, v] : j_edges) {
      act1.push_back(position(make_edge(p1[u], p1[v])));
      act2.push_back(position(make_edge(p2[u], p2[v])));
    }
    ev["h1_on_extra_edges"] = act1;
    ev["h2_on_extra_edges"] = act2;
    const bool three_cycle = std::set<int>(act1.begin(), act1.end()) == std::set<int>{0, 1, 2} && act1[0] != 0 &&
                             act1[1] != 1 && act1[2] != 2;
    const bool fixed = act2 == std::vector<int>{0, 1, 2};
    return three_cycle && fixed;
  });

  rb.check("every element of the generated group acts as an automorphism", [&](Json &ev) {
    if (!h_group || !xi) return false;
    const auto elems = h_group->elements();
    int good = 0;
    for (const auto &h : elems) good += is_automorphism(*xi, projective_image(h, ico, proj.pairing).span());
    ev["elements"] = elems.size();
    ev["automorphisms"] = good;
    return good == static_cast<int>(elems.size());
  });

  rb.check("automorphism group of the extended graph has order 12 and is A4", [&](Json &ev) {
    if (!xi) return false;
    const PermGroup aut = automorphism_group(*xi);
    ev["group"] = to_json(aut);
    const GroupName name = identify_group(aut);
    ev["identified"] = to_json(name);
    return aut.order() == 12 && name == GroupName::of(GroupTag::A4);
  });

  rb.check("no rotation outside the group preserves the extra edges", [&](Json &ev) {
    if (!h_group) return false;
    const std::set<Edge> j_set(j_edges.begin(), j_edges.end());
    int outside = 0, preserving = 0;
    for (const auto &r : rotations) {
      if (h_group->contains(r)) continue;
      ++outside;
      if (detail::edge_image(projective_image(r, ico, proj.pairing), j_edges) == j_set) ++preserving;
    }
    ev["outside"] = outside;
    ev["preserving_extra_edges"] = preserving;
    return outside == 48 && preserving == 0;
  });

  return rb.finish();
}

inline VerificationReport verify_remarks() {
  detail::ReportBuilder rb("remarks");
  const Polyhedron ico = build_icosahedron();
  const Polyhedron dod = build_dodecahedron();
  const Graph pi_i = projective_vertex_face_graph(ico).graph;
  const Graph pi_d = projective_vertex_face_graph(dod).graph;

  rb.check("icosahedral projective graph is connected, bipartite and edge-transitive", [&](Json &ev) {
    const PermGroup aut = automorphism_group(pi_i);
    const auto orbits = edge_orbits(pi_i, aut);
    ev["connected"] = is_connected(pi_i);
    ev["bipartite"] = is_bipartite(pi_i);
    ev["edge_orbits"] = orbits.size();
    ev["edge_orbit_sizes"] = [&] {
      std::vector<std::size_t> s;
      for (const auto &o : orbits) s.push_back(o.size());
      return s;
    }();
    return is_connected(pi_i) && is_bipartite(pi_i) && orbits.size() == 1 && orbits[0].size() == 30;
  });

  rb.check("dodecahedral and icosahedral projective graphs are isomorphic", [&](Json &ev) {
    const CanonicalForm fi = canonical_form(pi_i);
    const CanonicalForm fd = canonical_form(pi_d);
    ev["canonical_icosahedron"] = fi.graph6;
    ev["canonical_dodecahedron"] = fd.graph6;
    const auto witness = are_isomorphic(pi_d, pi_i);
    if (witness) ev["witness_dodecahedron_to_icosahedron"] = *witness;
    ev["note"] = "checked both as a graph isomorphism and via the automorphism group";
    return fi == fd && witness.has_value();
  });

  rb.check("dodecahedral projective graph has automorphism group A5", [&](Json &ev) {
    const PermGroup aut = automorphism_group(pi_d);
    const GroupName name = identify_group(aut);
    ev["order"] = aut.order().str();
    ev["identified"] = to_json(name);
    return name == GroupName::of(GroupTag::A5);
  });

  return rb.finish();
}

} // namespace hemi
