#pragma once

// Individualization-refinement: equitable refinement, automorphism group
// generators, canonical labeling and isomorphism testing.

#include "hemi/errors.hpp"
#include "hemi/graph.hpp"
#include "hemi/graph6.hpp"
#include "hemi/perm_group.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace hemi {

/// Ordered list of disjoint nonempty cells covering 0..n-1. Cells are kept
/// sorted internally; only their order and contents carry meaning.
class OrderedPartition {
public:
  OrderedPartition() = default;

  /// The single-cell partition of n vertices (empty for n = 0).
  static OrderedPartition unit(int n) {
    OrderedPartition p;
    p.n_ = n;
    if (n > 0) {
      p.cells_.emplace_back(n);
      std::iota(p.cells_[0].begin(), p.cells_[0].end(), 0);
    }
    return p;
  }

  explicit OrderedPartition(int n, std::vector<std::vector<int>> cells) : n_(n), cells_(std::move(cells)) {
    std::vector<char> seen(n, 0);
    int covered = 0;
    for (auto &c : cells_) {
      if (c.empty()) throw error("OrderedPartition: empty cell");
      std::sort(c.begin(), c.end());
      for (int v : c) {
        if (v < 0 || v >= n || seen[v]) throw error("OrderedPartition: cells are not a partition");
        seen[v] = 1;
        ++covered;
      }
    }
    if (covered != n) throw error("OrderedPartition: cells do not cover every vertex");
  }

  /// Cells grouping vertices by side label, Vertex side first.
  static OrderedPartition by_side(const Graph &g) {
    if (!g.has_sides()) return unit(g.order());
    std::vector<int> vs, fs;
    for (int v = 0; v < g.order(); ++v) (g.side(v) == Side::Vertex ? vs : fs).push_back(v);
    std::vector<std::vector<int>> cells;
    if (!vs.empty()) cells.push_back(vs);
    if (!fs.empty()) cells.push_back(fs);
    return OrderedPartition(g.order(), std::move(cells));
  }

  int num_vertices() const { return n_; }
  std::size_t num_cells() const { return cells_.size(); }
  const std::vector<std::vector<int>> &cells() const { return cells_; }
  const std::vector<int> &cell(std::size_t i) const { return cells_[i]; }
  bool is_discrete() const { return static_cast<int>(cells_.size()) == n_; }

  std::size_t cell_index(int v) const {
    for (std::size_t i = 0; i < cells_.size(); ++i)
      if (std::binary_search(cells_[i].begin(), cells_[i].end(), v)) return i;
    throw error("OrderedPartition: vertex not found");
  }

  std::vector<std::size_t> cell_sizes() const {
    std::vector<std::size_t> s;
    for (const auto &c : cells_) s.push_back(c.size());
    return s;
  }

  /// Splits v out of its cell, placing {v} immediately before the rest.
  OrderedPartition individualized(int v) const {
    OrderedPartition p = *this;
    const std::size_t i = cell_index(v);
    if (p.cells_[i].size() == 1) return p;
    std::vector<int> rest;
    for (int w : p.cells_[i])
      if (w != v) rest.push_back(w);
    p.cells_[i] = {v};
    p.cells_.insert(p.cells_.begin() + static_cast<std::ptrdiff_t>(i) + 1, std::move(rest));
    return p;
  }

  /// For a discrete partition: vertex -> position.
  std::vector<int> labeling() const {
    std::vector<int> lab(n_, -1);
    for (std::size_t i = 0; i < cells_.size(); ++i) lab[cells_[i][0]] = static_cast<int>(i);
    return lab;
  }

  /// True iff every cell of *this is contained in some cell of `coarser`.
  bool refines(const OrderedPartition &coarser) const {
    for (const auto &c : cells_) {
      const std::size_t i = coarser.cell_index(c.front());
      for (int v : c)
        if (!std::binary_search(coarser.cells_[i].begin(), coarser.cells_[i].end(), v)) return false;
    }
    return true;
  }

  friend bool operator==(const OrderedPartition &, const OrderedPartition &) = default;

private:
  friend OrderedPartition refine(const Graph &g, const OrderedPartition &p);
  int n_ = 0;
  std::vector<std::vector<int>> cells_;
};

/// Coarsest equitable refinement of p. A cell is split by the number of
/// neighbours its vertices have in a splitter cell; fragments replace the
/// cell in place, ordered by increasing count. Splitters are scanned in cell
/// order and the scan restarts after every split.
inline OrderedPartition refine(const Graph &g, const OrderedPartition &p) {
  OrderedPartition out = p;
  auto &cells = out.cells_;
  const int words = (g.order() + 63) / 64;
  std::vector<std::uint64_t> mask(words);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
      std::fill(mask.begin(), mask.end(), 0);
      for (int v : cells[s]) mask[v >> 6] |= std::uint64_t{1} << (v & 63);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (cells[c].size() == 1) continue;
        std::map<int, std::vector<int>> by_count;
        for (int v : cells[c]) {
          const auto row = g.row(v);
          int count = 0;
          for (int w = 0; w < words; ++w) count += std::popcount(row[w] & mask[w]);
          by_count[count].push_back(v);
        }
        if (by_count.size() == 1) continue;
        std::vector<std::vector<int>> fragments;
        for (auto &[count, verts] : by_count) fragments.push_back(std::move(verts));
        cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(c));
        cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c), fragments.begin(), fragments.end());
        changed = true;
        break;
      }
    }
  }
  return out;
}

/// Canonical adjacency certificate: the upper triangle, row-major, of the
/// canonically relabeled graph, packed most significant bit first.
struct CanonicalForm {
  int n = 0;
  std::vector<std::uint64_t> bits;
  std::string graph6; // graph6 of the canonically relabeled graph

  friend bool operator==(const CanonicalForm &a, const CanonicalForm &b) { return a.n == b.n && a.bits == b.bits; }
  friend auto operator<=>(const CanonicalForm &a, const CanonicalForm &b) {
    if (auto c = a.n <=> b.n; c != 0) return c;
    return a.bits <=> b.bits;
  }
};

namespace detail {

// Key of g relabeled by `label` (vertex -> label).
inline std::vector<std::uint64_t> relabeled_key(const Graph &g, const std::vector<int> &label) {
  const int n = g.order();
  std::vector<int> at(n);
  for (int v = 0; v < n; ++v) at[label[v]] = v;
  const std::size_t nbits = static_cast<std::size_t>(n) * (n > 0 ? n - 1 : 0) / 2;
  std::vector<std::uint64_t> key((nbits + 63) / 64, 0);
  std::size_t t = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++t)
      if (g.adjacent(at[i], at[j])) key[t / 64] |= std::uint64_t{1} << (63 - t % 64);
  return key;
}

inline bool preserves_cells(const OrderedPartition &p, const Permutation &perm) {
  for (const auto &c : p.cells())
    for (int v : c)
      if (!std::binary_search(c.begin(), c.end(), perm[v])) return false;
  return true;
}

inline std::size_t target_cell(const OrderedPartition &p) {
  std::size_t best = p.num_cells();
  for (std::size_t i = 0; i < p.num_cells(); ++i) {
    const std::size_t sz = p.cell(i).size();
    if (sz > 1 && (best == p.num_cells() || sz < p.cell(best).size())) best = i;
  }
  return best;
}

class Search {
public:
  Search(const Graph &g, const OrderedPartition &initial) : g_(g), initial_(initial) {}

  // Generators of the automorphisms preserving every initial cell.
  std::vector<Permutation> automorphisms() {
    const int n = g_.order();
    if (n <= 1) return {};
    OrderedPartition node = refine(g_, initial_);
    path_.push_back(node);
    while (!node.is_discrete()) {
      const std::size_t t = target_cell(node);
      targets_.push_back(node.cell(t));
      node = refine(g_, node.individualized(node.cell(t).front()));
      path_.push_back(node);
    }
    first_label_ = node.labeling();
    first_key_ = relabeled_key(g_, first_label_);

    std::vector<Permutation> gens;
    for (std::size_t k = targets_.size(); k-- > 0;) {
      const int fixed = targets_[k].front();
      std::vector<int> tried{fixed};
      for (int w : targets_[k]) {
        if (w == fixed) continue;
        const auto ids = orbit_ids(n, gens);
        if (std::any_of(tried.begin(), tried.end(), [&](int x) { return ids[x] == ids[w]; })) continue;
        tried.push_back(w);
        if (auto gamma = find_equivalent(refine(g_, path_[k].individualized(w)), k + 1)) {
          if (!is_automorphism(g_, gamma->span()) || !preserves_cells(initial_, *gamma))
            throw NotAutomorphism("search produced a permutation that is not an automorphism");
          gens.push_back(std::move(*gamma));
        }
      }
    }
    return gens;
  }

private:
  std::optional<Permutation> find_equivalent(const OrderedPartition &node, std::size_t depth) {
    if (node.cell_sizes() != path_[depth].cell_sizes()) return std::nullopt;
    if (node.is_discrete()) {
      const auto label = node.labeling();
      if (relabeled_key(g_, label) != first_key_) return std::nullopt;
      // vertex with label i in the first leaf -> vertex with label i here
      std::vector<int> first_at(label.size()), images(label.size());
      for (std::size_t v = 0; v < label.size(); ++v) first_at[first_label_[v]] = static_cast<int>(v);
      std::vector<int> at(label.size());
      for (std::size_t v = 0; v < label.size(); ++v) at[label[v]] = static_cast<int>(v);
      for (std::size_t i = 0; i < label.size(); ++i) images[first_at[i]] = at[i];
      return Permutation(std::move(images));
    }
    const std::size_t t = target_cell(node);
    for (int w : node.cell(t))
      if (auto gamma = find_equivalent(refine(g_, node.individualized(w)), depth + 1)) return gamma;
    return std::nullopt;
  }

  const Graph &g_;
  const OrderedPartition &initial_;
  std::vector<OrderedPartition> path_;
  std::vector<std::vector<int>> targets_;
  std::vector<int> first_label_;
  std::vector<std::uint64_t> first_key_;
};

} // namespace detail

/// Automorphisms of g that map every cell of `initial` to itself.
inline PermGroup automorphism_group(const Graph &g, const OrderedPartition &initial) {
  if (initial.num_vertices() != g.order()) throw error("automorphism_group: partition size mismatch");
  detail::Search search(g, initial);
  return PermGroup(g.order(), search.automorphisms());
}

inline PermGroup automorphism_group(const Graph &g) { return automorphism_group(g, OrderedPartition::unit(g.order())); }

struct CanonicalLabeling {
  std::vector<int> labeling; // vertex -> canonical label
  CanonicalForm form;
  PermGroup group;           // full automorphism group (unit initial partition)
};

/// Canonical labeling: the leaf of the search tree with the smallest key,
/// exploring one child per orbit of the prefix stabilizer.
inline CanonicalLabeling canonical_labeling(const Graph &g) {
  const int n = g.order();
  PermGroup group = automorphism_group(g);
  std::vector<int> best_label(n);
  std::iota(best_label.begin(), best_label.end(), 0);
  std::vector<std::uint64_t> best_key;
  bool have_best = false;

  const auto &gens = group.generators();
  std::vector<int> prefix;
  auto visit = [&](auto &&self, const OrderedPartition &node) -> void {
    if (node.is_discrete()) {
      auto label = node.labeling();
      auto key = detail::relabeled_key(g, label);
      if (!have_best || key < best_key) {
        best_key = std::move(key);
        best_label = std::move(label);
        have_best = true;
      }
      return;
    }
    std::vector<int> ids;
    if (gens.empty()) {
      ids.resize(n);
      std::iota(ids.begin(), ids.end(), 0);
    } else {
      PermGroup stab(n, gens, prefix);
      ids = orbit_ids(n, stab.stabilizer_generators(prefix.size()));
    }
    std::set<int> seen;
    for (int w : node.cell(detail::target_cell(node))) {
      if (!seen.insert(ids[w]).second) continue;
      prefix.push_back(w);
      self(self, refine(g, node.individualized(w)));
      prefix.pop_back();
    }
  };
  if (n > 0) visit(visit, refine(g, OrderedPartition::unit(n)));

  CanonicalForm form;
  form.n = n;
  form.bits = have_best ? best_key : std::vector<std::uint64_t>{};
  form.graph6 = graph6_encode(g.relabeled(best_label));
  return {std::move(best_label), std::move(form), std::move(group)};
}

inline CanonicalForm canonical_form(const Graph &g) { return canonical_labeling(g).form; }

/// An isomorphism g -> h (vertex of g -> vertex of h), checked edge by edge,
/// or nullopt if the graphs are not isomorphic.
inline std::optional<std::vector<int>> are_isomorphic(const Graph &g, const Graph &h) {
  if (g.order() != h.order() || g.size() != h.size()) return std::nullopt;
  const auto cg = canonical_labeling(g);
  const auto ch = canonical_labeling(h);
  if (cg.form != ch.form) return std::nullopt;
  std::vector<int> h_at(h.order());
  for (int v = 0; v < h.order(); ++v) h_at[ch.labeling[v]] = v;
  std::vector<int> phi(g.order());
  for (int v = 0; v < g.order(); ++v) phi[v] = h_at[cg.labeling[v]];
  for (const auto &[u, v] : g.edges())
    if (!h.adjacent(phi[u], phi[v])) throw error("are_isomorphic: witness failed edge check");
  return phi;
}

/// Orbits of the induced action of a on the edges of g, each sorted, listed
/// by smallest edge.
inline std::vector<std::vector<Edge>> edge_orbits(const Graph &g, const PermGroup &a) {
  const auto edges = g.edges();
  std::map<Edge, std::size_t> index;
  for (std::size_t i = 0; i < edges.size(); ++i) index[edges[i]] = i;
  std::vector<std::size_t> parent(edges.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto &gen : a.generators()) {
    if (gen.degree() != g.order()) throw NotAutomorphism("generator degree differs from graph order");
    for (std::size_t i = 0; i < edges.size(); ++i) {
      auto it = index.find(make_edge(gen[edges[i].first], gen[edges[i].second]));
      if (it == index.end()) throw NotAutomorphism("generator " + gen.cycle_string() + " does not preserve edges");
      const std::size_t x = find(i), y = find(it->second);
      if (x != y) parent[std::max(x, y)] = std::min(x, y);
    }
  }
  std::map<std::size_t, std::vector<Edge>> groups;
  for (std::size_t i = 0; i < edges.size(); ++i) groups[find(i)].push_back(edges[i]);
  std::vector<std::vector<Edge>> out;
  for (auto &[root, orbit] : groups) out.push_back(std::move(orbit));
  return out;
}

} // namespace hemi
