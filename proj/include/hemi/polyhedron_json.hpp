#pragma once

// Polyhedron <-> JSON. A coordinate a + b*phi is written [[an, ad], [bn, bd]].

#include "hemi/errors.hpp"
#include "hemi/polyhedron.hpp"

#include <json.hpp>

#include <vector>

namespace hemi {

inline nlohmann::json golden_to_json(const GoldenRational &x) {
  const auto &a = x.rational_part();
  const auto &b = x.phi_part();
  return {{a.numerator(), a.denominator()}, {b.numerator(), b.denominator()}};
}

inline GoldenRational golden_from_json(const nlohmann::json &j) {
  auto rational = [](const nlohmann::json &r) {
    const auto den = r.at(1).get<std::int64_t>();
    if (den == 0) throw error("polyhedron JSON: zero denominator");
    return Rational(r.at(0).get<std::int64_t>(), den);
  };
  return {rational(j.at(0)), rational(j.at(1))};
}

inline nlohmann::json polyhedron_to_json(const Polyhedron &p) {
  nlohmann::json verts = nlohmann::json::array();
  for (const auto &v : p.vertices()) verts.push_back({golden_to_json(v.x), golden_to_json(v.y), golden_to_json(v.z)});
  return {{"vertices", verts}, {"faces", p.faces()}};
}

inline Polyhedron polyhedron_from_json(const nlohmann::json &j) {
  std::vector<GVec3> verts;
  for (const auto &v : j.at("vertices"))
    verts.push_back({golden_from_json(v.at(0)), golden_from_json(v.at(1)), golden_from_json(v.at(2))});
  return Polyhedron(std::move(verts), j.at("faces").get<std::vector<std::vector<int>>>());
}

} // namespace hemi
