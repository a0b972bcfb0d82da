#pragma once

// Permutation groups held as a Sims table (stabilizer chain with explicit
// transversals), built with Knuth's incremental form of Schreier-Sims.

#include "hemi/errors.hpp"
#include "hemi/permutation.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

namespace hemi {

using BigInt = boost::multiprecision::cpp_int;

/// Groups of at most this order may be enumerated element by element.
inline constexpr std::uint64_t kEnumerationBound = 20000;

class PermGroup {
public:
  /// The group generated by `gens` on `degree` points. The stabilizer chain
  /// uses `base_prefix` first, then the remaining points in increasing order.
  PermGroup(int degree, std::vector<Permutation> gens, std::span<const int> base_prefix = {})
      : degree_(degree), generators_(std::move(gens)) {
    for (const auto &g : generators_)
      if (g.degree() != degree_) throw DegreeMismatch("PermGroup: generator degree differs from group degree");
    std::vector<char> used(degree_, 0);
    std::vector<int> order;
    for (int b : base_prefix) {
      if (b < 0 || b >= degree_ || used[b]) throw error("PermGroup: invalid base prefix");
      used[b] = 1;
      order.push_back(b);
    }
    for (int p = 0; p < degree_; ++p)
      if (!used[p]) order.push_back(p);
    levels_.reserve(order.size());
    for (int b : order) {
      Level lv;
      lv.point = b;
      lv.transversal.resize(degree_);
      lv.transversal[b] = Permutation::identity(degree_);
      lv.orbit.push_back(b);
      levels_.push_back(std::move(lv));
    }
    for (const auto &g : generators_) add(0, g);
  }

  /// Group generated by `gens`; degree taken from the first generator.
  static PermGroup generated_by(std::vector<Permutation> gens) {
    if (gens.empty()) throw error("PermGroup: empty generator list needs an explicit degree");
    const int d = gens.front().degree();
    return PermGroup(d, std::move(gens));
  }

  int degree() const { return degree_; }
  const std::vector<Permutation> &generators() const { return generators_; }

  BigInt order() const {
    BigInt o = 1;
    for (const auto &lv : levels_) o *= lv.orbit.size();
    return o;
  }

  /// Order as a machine integer; throws TooLarge if it does not fit.
  std::uint64_t small_order() const {
    const BigInt o = order();
    if (o > BigInt(std::numeric_limits<std::uint64_t>::max())) throw TooLarge("group order exceeds 64 bits");
    return o.convert_to<std::uint64_t>();
  }

  bool contains(const Permutation &g) const {
    if (g.degree() != degree_) return false;
    return sift(g, 0).is_identity();
  }

  /// Base points whose basic orbit is nontrivial, in chain order.
  std::vector<int> base() const {
    std::vector<int> out;
    for (const auto &lv : levels_)
      if (lv.orbit.size() > 1) out.push_back(lv.point);
    return out;
  }

  std::vector<std::size_t> basic_orbit_lengths() const {
    std::vector<std::size_t> out;
    for (const auto &lv : levels_)
      if (lv.orbit.size() > 1) out.push_back(lv.orbit.size());
    return out;
  }

  std::vector<Permutation> strong_generators() const { return stabilizer_generators(0); }

  /// Generators of the pointwise stabilizer of the first `k` chain points.
  std::vector<Permutation> stabilizer_generators(std::size_t k) const {
    std::vector<Permutation> out;
    for (std::size_t i = k; i < levels_.size(); ++i)
      out.insert(out.end(), levels_[i].gens.begin(), levels_[i].gens.end());
    return out;
  }

  BigInt stabilizer_order(std::size_t k) const {
    BigInt o = 1;
    for (std::size_t i = k; i < levels_.size(); ++i) o *= levels_[i].orbit.size();
    return o;
  }

  std::vector<int> orbit(int point) const {
    std::vector<char> seen(degree_, 0);
    std::vector<int> out{point};
    seen[point] = 1;
    for (std::size_t i = 0; i < out.size(); ++i)
      for (const auto &g : generators_) {
        const int q = g[out[i]];
        if (!seen[q]) {
          seen[q] = 1;
          out.push_back(q);
        }
      }
    std::sort(out.begin(), out.end());
    return out;
  }

  struct OrbitStabilizer {
    std::vector<int> orbit;
    BigInt stabilizer_order;
  };

  OrbitStabilizer orbit_and_stabilizer(int point) const {
    OrbitStabilizer r{orbit(point), 0};
    r.stabilizer_order = order() / r.orbit.size();
    return r;
  }

  /// Every element, as products of transversal elements along the chain.
  std::vector<Permutation> elements(std::uint64_t bound = kEnumerationBound) const {
    if (order() > bound) throw TooLarge("group too large to enumerate");
    std::vector<Permutation> out{Permutation::identity(degree_)};
    for (auto it = levels_.rbegin(); it != levels_.rend(); ++it) {
      if (it->orbit.size() == 1) continue;
      std::vector<Permutation> next;
      next.reserve(out.size() * it->orbit.size());
      for (int p : it->orbit)
        for (const auto &e : out) next.push_back(*it->transversal[p] * e);
      out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

private:
  struct Level {
    int point = 0;
    std::vector<Permutation> gens;
    std::vector<std::optional<Permutation>> transversal; // transversal[p](point) == p
    std::vector<int> orbit;
  };

  Permutation sift(Permutation g, std::size_t k) const {
    for (std::size_t i = k; i < levels_.size(); ++i) {
      const auto &lv = levels_[i];
      const int j = g[lv.point];
      if (!lv.transversal[j]) return g;
      g = lv.transversal[j]->inverse() * g;
    }
    return g;
  }

  // g fixes the first k chain points.
  void add(std::size_t k, const Permutation &g) {
    if (k >= levels_.size() || sift(g, k).is_identity()) return;
    levels_[k].gens.push_back(g);
    const std::vector<int> reps = levels_[k].orbit;
    for (int p : reps) extend(k, g * *levels_[k].transversal[p]);
  }

  // h lies in the k-th stabilizer; make the chain from level k account for it.
  void extend(std::size_t k, const Permutation &h) {
    auto &lv = levels_[k];
    const int j = h[lv.point];
    if (!lv.transversal[j]) {
      lv.transversal[j] = h;
      lv.orbit.push_back(j);
      for (std::size_t s = 0; s < levels_[k].gens.size(); ++s) {
        const Permutation next = levels_[k].gens[s] * h;
        extend(k, next);
      }
    } else {
      add(k + 1, levels_[k].transversal[j]->inverse() * h);
    }
  }

  int degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Level> levels_;
};

/// Orbit id of every point under the group generated by `gens`; ids follow
/// the smallest point of each orbit.
inline std::vector<int> orbit_ids(int degree, std::span<const Permutation> gens) {
  std::vector<int> id(degree, -1);
  int next = 0;
  for (int p = 0; p < degree; ++p) {
    if (id[p] >= 0) continue;
    id[p] = next;
    std::vector<int> stack{p};
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (const auto &g : gens) {
        const int y = g[x];
        if (id[y] < 0) {
          id[y] = next;
          stack.push_back(y);
        }
      }
    }
    ++next;
  }
  return id;
}

} // namespace hemi
