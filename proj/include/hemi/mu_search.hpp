#pragma once

// Exhaustive search for the fewest vertices of a graph whose automorphism
// group is isomorphic to a given group. Graphs are generated one per
// isomorphism class by canonical augmentation: a child G + v is kept only if
// v lies in the automorphism orbit of the vertex that receives the last
// canonical label, and children of one parent are deduplicated by canonical
// form.

#include "hemi/automorphisms.hpp"
#include "hemi/errors.hpp"
#include "hemi/graph6.hpp"
#include "hemi/group_analysis.hpp"
#include "hemi/verify.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace hemi {

/// Largest vertex count searched without opting in to the slower tier.
inline constexpr int kGuaranteedSearchTier = 7;
inline constexpr int kStretchSearchTier = 9;

struct ClassRepresentative {
  Graph graph;
  std::vector<Permutation> automorphism_generators;
  BigInt automorphism_order;
  std::string canonical_graph6;
};

/// Representatives of the isomorphism classes on parent.order() + 1
/// vertices whose canonical deletion gives back parent.
inline std::vector<ClassRepresentative> augment(const Graph &parent) {
  const int m = parent.order();
  const int n = m + 1;
  std::vector<ClassRepresentative> out;
  std::set<CanonicalForm> seen;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    Graph child(n);
    for (const auto &[u, v] : parent.edges()) child.add_edge(u, v);
    for (int u = 0; u < m; ++u)
      if ((mask >> u) & 1) child.add_edge(u, m);
    CanonicalLabeling cl = canonical_labeling(child);
    int last = 0;
    for (int v = 0; v < n; ++v)
      if (cl.labeling[v] == n - 1) last = v;
    const auto ids = orbit_ids(n, cl.group.generators());
    if (ids[m] != ids[last]) continue;
    if (!seen.insert(cl.form).second) continue;
    out.push_back({std::move(child), cl.group.generators(), cl.group.order(), cl.form.graph6});
  }
  return out;
}

/// Calls `visit` once per isomorphism class of graphs on 1..n_max vertices,
/// level by level. `level_done` may return false to stop after a level.
inline void enumerate_graphs(int n_max, const std::function<void(int, const ClassRepresentative &)> &visit,
                             const std::function<bool(int, std::size_t)> &level_done = {}) {
  if (n_max < 1) return;
  std::vector<ClassRepresentative> level{{Graph(1), {}, BigInt(1), graph6_encode(Graph(1))}};
  for (int n = 1;; ++n) {
    for (const auto &rep : level) visit(n, rep);
    if (level_done && !level_done(n, level.size())) break;
    if (n == n_max) break;
    std::vector<ClassRepresentative> next;
    for (const auto &rep : level) {
      auto kids = augment(rep.graph);
      for (auto &k : kids) next.push_back(std::move(k));
    }
    level = std::move(next);
  }
}

struct SearchReport {
  GroupName target;
  int n_max = 0;
  std::optional<int> found_n;       // minimal vertex count, if realised
  std::string certificate;          // graph6 of the canonical form of the chosen witness
  std::vector<Permutation> certificate_generators;
  std::vector<std::size_t> classes_per_n;

  Json to_json() const {
    Json j;
    j["schema"] = 1;
    j["target"] = target.to_string();
    j["n_max"] = n_max;
    if (found_n) {
      j["result"] = "found";
      j["n"] = *found_n;
      j["certificate"] = certificate;
      j["generators"] = hemi::to_json(certificate_generators);
    } else {
      j["result"] = "not_found";
      j["not_found_up_to"] = n_max;
    }
    j["classes_per_n"] = classes_per_n;
    return j;
  }
};

struct SearchOptions {
  bool allow_stretch = false;
  std::function<void(int, std::size_t)> progress; // (n, classes at n)
};

inline SearchReport mu_search(const GroupName &target, int n_max, const SearchOptions &opt = {}) {
  if (target.tag == GroupTag::Unknown || target.order() == 0)
    throw TargetNotIdentifiable("search target must be a named group");
  if (n_max < 1) throw error("mu_search: n_max must be at least 1");
  if (n_max > kGuaranteedSearchTier && !opt.allow_stretch)
    throw error("mu_search: n_max above " + std::to_string(kGuaranteedSearchTier) + " needs the stretch tier");
  if (n_max > kStretchSearchTier) throw error("mu_search: n_max above " + std::to_string(kStretchSearchTier) + " is not supported");

  SearchReport report;
  report.target = GroupName{target.tag, target.k, {}};
  report.n_max = n_max;
  const BigInt wanted = target.order();

  // Every level is visited in full before the next is generated, so the
  // search can stop at the first level with a hit.
  std::optional<int> hit_level;
  std::string best;
  std::vector<Permutation> best_gens;
  enumerate_graphs(
        n_max,
        [&](int n, const ClassRepresentative &rep) {
          if (rep.automorphism_order != wanted) return;
          const GroupName name = identify_group(PermGroup(n, rep.automorphism_generators));
          if (!(name == target)) return;
          const Graph canon = graph6_decode(rep.canonical_graph6);
          if (!hit_level || rep.canonical_graph6 < best) {
            best = rep.canonical_graph6;
            best_gens = automorphism_group(canon).generators();
          }
          hit_level = n;
        },
        [&](int n, std::size_t count) {
          report.classes_per_n.push_back(count);
          if (opt.progress) opt.progress(n, count);
          return !hit_level.has_value();
        });
  if (hit_level) {
    report.found_n = hit_level;
    report.certificate = best;
    report.certificate_generators = std::move(best_gens);
  }
  return report;
}

} // namespace hemi
