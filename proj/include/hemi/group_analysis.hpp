#pragma once

// Structural invariants of small permutation groups and evidence-based
// recognition of the handful of groups this project cares about.

#include "hemi/errors.hpp"
#include "hemi/perm_group.hpp"

#include <charconv>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hemi {

namespace detail {
inline void require_enumerable(const PermGroup &g) {
  if (g.order() > kEnumerationBound) throw TooLarge("group order exceeds the enumeration bound");
}
} // namespace detail

inline bool is_abelian(const PermGroup &g) {
  const auto &gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (gens[i] * gens[j] != gens[j] * gens[i]) return false;
  return true;
}

inline std::map<long long, std::uint64_t> element_order_histogram(const PermGroup &g) {
  detail::require_enumerable(g);
  std::map<long long, std::uint64_t> hist;
  for (const auto &e : g.elements()) ++hist[e.order()];
  return hist;
}

/// Smallest normal subgroup of g containing `seeds`.
inline PermGroup normal_closure(const PermGroup &g, std::vector<Permutation> seeds) {
  std::vector<Permutation> gens;
  for (auto &s : seeds)
    if (!s.is_identity()) gens.push_back(std::move(s));
  PermGroup n(g.degree(), gens);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (const auto &x : g.generators()) {
      Permutation c = x.inverse() * gens[i] * x;
      if (!n.contains(c)) {
        gens.push_back(std::move(c));
        n = PermGroup(g.degree(), gens);
      }
    }
  }
  return n;
}

inline PermGroup derived_subgroup(const PermGroup &g) {
  detail::require_enumerable(g);
  std::vector<Permutation> comms;
  const auto &gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) comms.push_back(commutator(gens[i], gens[j]));
  return normal_closure(g, std::move(comms));
}

inline PermGroup center(const PermGroup &g) {
  detail::require_enumerable(g);
  std::vector<Permutation> central;
  for (const auto &e : g.elements()) {
    bool commutes = true;
    for (const auto &x : g.generators())
      if (e * x != x * e) {
        commutes = false;
        break;
      }
    if (commutes && !e.is_identity()) central.push_back(e);
  }
  return PermGroup(g.degree(), std::move(central));
}

/// Simple: nontrivial, and every nontrivial element has normal closure g.
inline bool is_simple(const PermGroup &g) {
  detail::require_enumerable(g);
  const BigInt order = g.order();
  if (order == 1) return false;
  for (const auto &e : g.elements()) {
    if (e.is_identity()) continue;
    if (normal_closure(g, {e}).order() != order) return false;
  }
  return true;
}

enum class GroupTag { Trivial, Cyclic, Dihedral, A4, S4, A5, S5, A5xC2, Unknown };

struct GroupEvidence {
  std::uint64_t order = 0;
  std::map<long long, std::uint64_t> histogram;
  bool abelian = false;
  std::uint64_t center_order = 0;
  std::uint64_t derived_order = 0;
  std::optional<bool> simple;           // evaluated for orders 60 and 120 only
  std::optional<bool> derived_simple;   // order 120 only
};

struct GroupName {
  GroupTag tag = GroupTag::Unknown;
  int k = 0; // parameter of Cyclic(k) / Dihedral(k)
  std::optional<GroupEvidence> evidence;

  static GroupName trivial() { return {GroupTag::Trivial, 0, {}}; }
  static GroupName cyclic(int k) { return k == 1 ? trivial() : GroupName{GroupTag::Cyclic, k, {}}; }
  static GroupName dihedral(int k) { return {GroupTag::Dihedral, k, {}}; }
  static GroupName of(GroupTag t) { return {t, 0, {}}; }

  /// Order of the named group; 0 for Unknown.
  std::uint64_t order() const {
    switch (tag) {
    case GroupTag::Trivial: return 1;
    case GroupTag::Cyclic: return static_cast<std::uint64_t>(k);
    case GroupTag::Dihedral: return 2 * static_cast<std::uint64_t>(k);
    case GroupTag::A4: return 12;
    case GroupTag::S4: return 24;
    case GroupTag::A5: return 60;
    case GroupTag::S5:
    case GroupTag::A5xC2: return 120;
    case GroupTag::Unknown: return 0;
    }
    return 0;
  }

  std::string to_string() const {
    switch (tag) {
    case GroupTag::Trivial: return "Trivial";
    case GroupTag::Cyclic: return "C" + std::to_string(k);
    case GroupTag::Dihedral: return "D" + std::to_string(k);
    case GroupTag::A4: return "A4";
    case GroupTag::S4: return "S4";
    case GroupTag::A5: return "A5";
    case GroupTag::S5: return "S5";
    case GroupTag::A5xC2: return "A5xC2";
    case GroupTag::Unknown: return "Unknown";
    }
    return "Unknown";
  }

  /// Accepts the names produced by to_string plus a few aliases:
  /// "1", "Z<k>", "Cyclic(k)", "Dihedral(k)", "S3" (= D3), "V4" (= D2).
  static std::optional<GroupName> parse(std::string_view s) {
    auto number = [](std::string_view t) -> std::optional<int> {
      int v = 0;
      auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
      if (ec != std::errc() || p != t.data() + t.size() || v < 1) return std::nullopt;
      return v;
    };
    auto strip_call = [](std::string_view t, std::string_view fn) -> std::optional<std::string_view> {
      if (t.size() > fn.size() + 2 && t.starts_with(fn) && t[fn.size()] == '(' && t.back() == ')')
        return t.substr(fn.size() + 1, t.size() - fn.size() - 2);
      return std::nullopt;
    };
    if (s == "Trivial" || s == "1") return trivial();
    if (s == "A4") return of(GroupTag::A4);
    if (s == "S4") return of(GroupTag::S4);
    if (s == "A5") return of(GroupTag::A5);
    if (s == "S5") return of(GroupTag::S5);
    if (s == "A5xC2" || s == "A5xZ2") return of(GroupTag::A5xC2);
    if (s == "S3") return dihedral(3);
    if (s == "V4") return dihedral(2);
    if (auto a = strip_call(s, "Cyclic"))
      if (auto k = number(*a)) return cyclic(*k);
    if (auto a = strip_call(s, "Dihedral"))
      if (auto k = number(*a); k && *k >= 2) return dihedral(*k);
    if (s.size() >= 2 && (s[0] == 'C' || s[0] == 'Z'))
      if (auto k = number(s.substr(1))) return cyclic(*k);
    if (s.size() >= 2 && s[0] == 'D')
      if (auto k = number(s.substr(1)); k && *k >= 2) return dihedral(*k);
    return std::nullopt;
  }

  friend bool operator==(const GroupName &a, const GroupName &b) { return a.tag == b.tag && a.k == b.k; }
};

namespace detail {

// r of order k, s an involution outside <r>, with s r s = r^-1.
inline bool has_dihedral_witness(const std::vector<Permutation> &elems, long long k) {
  std::vector<const Permutation *> involutions;
  for (const auto &e : elems)
    if (e.order() == 2) involutions.push_back(&e);
  for (const auto &r : elems) {
    if (r.order() != k) continue;
    std::vector<Permutation> powers;
    Permutation p = Permutation::identity(r.degree());
    for (long long i = 0; i < k; ++i, p = p * r) powers.push_back(p);
    const Permutation r_inv = r.inverse();
    for (const Permutation *s : involutions) {
      if (std::find(powers.begin(), powers.end(), *s) != powers.end()) continue;
      if (*s * r * *s == r_inv) return true;
    }
  }
  return false;
}

} // namespace detail

/// Names g by order, element orders, center, derived subgroup and
/// simplicity. Anything the table cannot pin down is Unknown.
inline GroupName identify_group(const PermGroup &g) {
  detail::require_enumerable(g);
  GroupEvidence ev;
  ev.order = g.small_order();
  const auto elems = g.elements();
  for (const auto &e : elems) ++ev.histogram[e.order()];
  ev.abelian = is_abelian(g);
  ev.center_order = center(g).small_order();
  ev.derived_order = derived_subgroup(g).small_order();

  GroupName name;
  const std::uint64_t n = ev.order;
  const long long max_elem_order = ev.histogram.rbegin()->first;
  auto orders_within = [&](std::initializer_list<long long> allowed) {
    for (const auto &[o, c] : ev.histogram)
      if (std::find(allowed.begin(), allowed.end(), o) == allowed.end()) return false;
    return true;
  };

  if (n == 60 || n == 120) ev.simple = is_simple(g);
  if (n == 120) ev.derived_simple = is_simple(derived_subgroup(g));

  if (n == 1) {
    name = GroupName::trivial();
  } else if (ev.abelian && static_cast<std::uint64_t>(max_elem_order) == n) {
    name = GroupName::cyclic(static_cast<int>(n));
  } else if (n % 2 == 0 && n >= 4 && detail::has_dihedral_witness(elems, static_cast<long long>(n / 2))) {
    name = GroupName::dihedral(static_cast<int>(n / 2));
  } else if (n == 12 && orders_within({1, 2, 3})) {
    name = GroupName::of(GroupTag::A4);
  } else if (n == 60 && *ev.simple) {
    name = GroupName::of(GroupTag::A5);
  } else if (n == 24 && ev.histogram == std::map<long long, std::uint64_t>{{1, 1}, {2, 9}, {3, 8}, {4, 6}}) {
    name = GroupName::of(GroupTag::S4);
  } else if (n == 120 && ev.center_order == 1 && ev.derived_order == 60 && *ev.derived_simple) {
    name = GroupName::of(GroupTag::S5);
  } else if (n == 120 && ev.center_order == 2 && ev.derived_order == 60 && *ev.derived_simple) {
    name = GroupName::of(GroupTag::A5xC2);
  }
  name.evidence = std::move(ev);
  return name;
}

} // namespace hemi
