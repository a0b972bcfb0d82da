#include "hemi/actions.hpp"
#include "hemi/constructions.hpp"
#include "hemi/group_analysis.hpp"
#include "hemi/perm_group.hpp"
#include "hemi/verify.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <optional>
#include <random>
#include <set>

using namespace hemi;

namespace {

Permutation cyc(int degree, std::vector<std::vector<int>> cycles) { return Permutation::from_cycles(degree, cycles); }

std::vector<int> range(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

struct Fixture {
  std::string label;
  int degree;
  std::vector<Permutation> gens;
  GroupName expected;
};

std::vector<Fixture> fixture_library() {
  std::vector<Fixture> out;
  for (int k = 2; k <= 12; ++k) out.push_back({"C" + std::to_string(k), k, {cyc(k, {range(k)})}, GroupName::cyclic(k)});
  for (int k = 3; k <= 8; ++k) {
    std::vector<int> reflection(k);
    for (int i = 0; i < k; ++i) reflection[i] = (k - i) % k;
    out.push_back({"D" + std::to_string(k), k, {cyc(k, {range(k)}), Permutation(reflection)}, GroupName::dihedral(k)});
  }
  out.push_back({"V4", 4, {cyc(4, {{0, 1}, {2, 3}}), cyc(4, {{0, 2}, {1, 3}})}, GroupName::dihedral(2)});
  out.push_back({"A4", 4, {cyc(4, {{0, 1, 2}}), cyc(4, {{0, 1}, {2, 3}})}, GroupName::of(GroupTag::A4)});
  out.push_back({"S4", 4, {cyc(4, {{0, 1, 2, 3}}), cyc(4, {{0, 1}})}, GroupName::of(GroupTag::S4)});
  out.push_back({"A5", 5, {cyc(5, {{0, 1, 2, 3, 4}}), cyc(5, {{0, 1, 2}})}, GroupName::of(GroupTag::A5)});
  out.push_back({"S5", 5, {cyc(5, {{0, 1, 2, 3, 4}}), cyc(5, {{0, 1}})}, GroupName::of(GroupTag::S5)});
  out.push_back({"A5xC2", 7, {cyc(7, {{0, 1, 2, 3, 4}}), cyc(7, {{0, 1, 2}}), cyc(7, {{5, 6}})},
                 GroupName::of(GroupTag::A5xC2)});
  return out;
}

/// Closure capped at `cap` elements; nullopt if the group is larger.
std::optional<std::set<Permutation>> bounded_closure(int degree, const std::vector<Permutation> &gens, std::size_t cap) {
  std::set<Permutation> seen{Permutation::identity(degree)};
  std::vector<Permutation> queue{Permutation::identity(degree)};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const auto &g : gens) {
      Permutation p = queue[i] * g;
      if (seen.insert(p).second) {
        if (seen.size() > cap) return std::nullopt;
        queue.push_back(std::move(p));
      }
    }
  return seen;
}

std::set<Permutation> brute_derived(int degree, const std::vector<Permutation> &gens) {
  const auto all = oracle::closure(degree, gens);
  std::set<Permutation> comms;
  for (const auto &a : all)
    for (const auto &b : all) comms.insert(commutator(a, b));
  return oracle::closure(degree, std::vector<Permutation>(comms.begin(), comms.end()));
}

/// Random permutation moving only a random subset of the points, so that
/// intransitive and imprimitive groups turn up as well as S_n and A_n.
Permutation random_partial_permutation(int n, std::mt19937 &rng) {
  std::vector<int> points = range(n);
  std::shuffle(points.begin(), points.end(), rng);
  const int moved = std::uniform_int_distribution<int>(2, n)(rng);
  std::vector<int> targets(points.begin(), points.begin() + moved);
  std::shuffle(targets.begin(), targets.end(), rng);
  std::vector<int> images = range(n);
  for (int i = 0; i < moved; ++i) images[points[i]] = targets[i];
  return Permutation(images);
}

PermGroup pi_automorphisms() {
  return automorphism_group(projective_vertex_face_graph(build_icosahedron()).graph);
}

} // namespace

TEST(Permutation, Basics) {
  const Permutation a = cyc(5, {{0, 1, 2}});
  const Permutation b = cyc(5, {{2, 3}});
  EXPECT_EQ((a * b)(2), a(b(2)));
  EXPECT_EQ(a.order(), 3);
  EXPECT_EQ((a * b).order(), 4);
  EXPECT_TRUE((a * a.inverse()).is_identity());
  EXPECT_EQ(a.pow(3), Permutation::identity(5));
  EXPECT_EQ(a.pow(-1), a.inverse());
  EXPECT_EQ(a.cycle_string(), "(0 1 2)");
  EXPECT_EQ(Permutation::identity(3).cycle_string(), "()");
  EXPECT_EQ(commutator(a, b), a.inverse() * b.inverse() * a * b);
  EXPECT_THROW(Permutation(std::vector<int>{0, 0}), error);
}

TEST(SchreierSims, SymmetricAndAlternatingGroups) {
  BigInt factorial = 1;
  for (int n = 2; n <= 12; ++n) {
    factorial *= n;
    const PermGroup s(n, {cyc(n, {range(n)}), cyc(n, {{0, 1}})});
    EXPECT_EQ(s.order(), factorial) << n;
    BigInt product = 1;
    for (auto len : s.basic_orbit_lengths()) product *= len;
    EXPECT_EQ(product, factorial);
  }
  // A_n from 3-cycles (0 1 k)
  for (int n = 3; n <= 10; ++n) {
    std::vector<Permutation> gens;
    for (int k = 2; k < n; ++k) gens.push_back(cyc(n, {{0, 1, k}}));
    BigInt half = 1;
    for (int i = 3; i <= n; ++i) half *= i;
    EXPECT_EQ(PermGroup(n, gens).order(), half) << n;
  }
}

TEST(SchreierSims, BasePrefixIsHonoured) {
  const int prefix[] = {3, 1};
  const PermGroup s(5, {cyc(5, {range(5)}), cyc(5, {{0, 1}})}, prefix);
  EXPECT_EQ(s.base().at(0), 3);
  EXPECT_EQ(s.base().at(1), 1);
  EXPECT_EQ(s.stabilizer_order(1), 24);
  EXPECT_EQ(s.stabilizer_order(2), 6);
  for (const auto &g : s.stabilizer_generators(2)) {
    EXPECT_EQ(g(3), 3);
    EXPECT_EQ(g(1), 1);
  }
}

TEST(SchreierSims, ErrorsAndTrivialGroup) {
  EXPECT_THROW(PermGroup(4, {Permutation::identity(5)}), DegreeMismatch);
  const PermGroup trivial(6, {});
  EXPECT_EQ(trivial.order(), 1);
  EXPECT_EQ(trivial.elements().size(), 1u);
  const PermGroup s8(8, {cyc(8, {range(8)}), cyc(8, {{0, 1}})});
  EXPECT_THROW(s8.elements(), TooLarge);
  EXPECT_EQ(s8.elements(50000).size(), 40320u);
}

TEST(GroupFixtures, OrderMatchesClosureAndNamesRoundTrip) {
  for (const auto &f : fixture_library()) {
    const PermGroup g(f.degree, f.gens);
    const auto elems = oracle::closure(f.degree, f.gens);
    EXPECT_EQ(g.order(), elems.size()) << f.label;
    const auto enumerated = g.elements();
    EXPECT_EQ(std::set<Permutation>(enumerated.begin(), enumerated.end()), elems) << f.label;
    const GroupName name = identify_group(g);
    EXPECT_EQ(name, f.expected) << f.label << " identified as " << name.to_string();
    const auto parsed = GroupName::parse(name.to_string());
    ASSERT_TRUE(parsed.has_value()) << name.to_string();
    EXPECT_EQ(*parsed, name);
  }
}

TEST(GroupFixtures, NameAliases) {
  EXPECT_EQ(GroupName::parse("1"), GroupName::trivial());
  EXPECT_EQ(GroupName::parse("Trivial"), GroupName::trivial());
  EXPECT_EQ(GroupName::parse("Z3"), GroupName::cyclic(3));
  EXPECT_EQ(GroupName::parse("Cyclic(5)"), GroupName::cyclic(5));
  EXPECT_EQ(GroupName::parse("Dihedral(4)"), GroupName::dihedral(4));
  EXPECT_EQ(GroupName::parse("S3"), GroupName::dihedral(3));
  EXPECT_EQ(GroupName::parse("V4"), GroupName::dihedral(2));
  EXPECT_FALSE(GroupName::parse("NotAGroup").has_value());
}

TEST(GroupFixtures, UnidentifiedGroupsAreReportedAsUnknown) {
  // C2 x C2 x C2 and C3 x S3 are outside the table
  const PermGroup c2cube(6, {cyc(6, {{0, 1}}), cyc(6, {{2, 3}}), cyc(6, {{4, 5}})});
  EXPECT_EQ(identify_group(c2cube).tag, GroupTag::Unknown);
  const PermGroup c3s3(6, {cyc(6, {{0, 1, 2}}), cyc(6, {{3, 4, 5}}), cyc(6, {{3, 4}})});
  EXPECT_EQ(identify_group(c3s3).tag, GroupTag::Unknown);
}

TEST(SchreierSims, RandomTwoGeneratorGroupsMatchEnumeration) {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> degree(3, 9);
  int tested = 0;
  while (tested < 50) {
    const int n = degree(rng);
    std::vector<Permutation> gens{random_partial_permutation(n, rng), random_partial_permutation(n, rng)};
    const auto elems = bounded_closure(n, gens, kEnumerationBound);
    if (!elems) continue;
    const PermGroup g(n, gens);
    ASSERT_EQ(g.order(), elems->size());
    for (const auto &e : *elems) EXPECT_TRUE(g.contains(e));
    for (int trial = 0; trial < 20; ++trial) {
      const Permutation p(oracle::random_permutation(n, rng));
      EXPECT_EQ(g.contains(p), elems->contains(p));
    }
    ++tested;
  }
}

TEST(Membership, AlternatingGroup) {
  const PermGroup a5(5, {cyc(5, {range(5)}), cyc(5, {{0, 1, 2}})});
  EXPECT_TRUE(a5.contains(cyc(5, {{1, 3, 4}})));
  EXPECT_TRUE(a5.contains(cyc(5, {{0, 1}, {2, 3}})));
  EXPECT_FALSE(a5.contains(cyc(5, {{0, 1}})));
  EXPECT_FALSE(a5.contains(cyc(5, {{0, 1, 2, 3}})));
  EXPECT_FALSE(a5.contains(Permutation::identity(6)));
}

TEST(GroupAnalysis, ElementOrderHistograms) {
  const PermGroup aut = pi_automorphisms();
  EXPECT_EQ(element_order_histogram(aut), (std::map<long long, std::uint64_t>{{1, 1}, {2, 15}, {3, 20}, {5, 24}}));
  const PermGroup a4(4, {cyc(4, {{0, 1, 2}}), cyc(4, {{0, 1}, {2, 3}})});
  EXPECT_EQ(element_order_histogram(a4), (std::map<long long, std::uint64_t>{{1, 1}, {2, 3}, {3, 8}}));
}

TEST(GroupAnalysis, DerivedSubgroupAgreesWithCommutatorClosure) {
  const PermGroup full = automorphism_group(one_skeleton(build_icosahedron()));
  const PermGroup derived = derived_subgroup(full);
  EXPECT_EQ(full.order(), 120);
  EXPECT_EQ(derived.order(), 60);
  const auto brute = brute_derived(12, full.generators());
  EXPECT_EQ(brute.size(), 60u);
  for (const auto &e : brute) EXPECT_TRUE(derived.contains(e));

  const PermGroup s4(4, {cyc(4, {{0, 1, 2, 3}}), cyc(4, {{0, 1}})});
  EXPECT_EQ(derived_subgroup(s4).order(), 12);
  EXPECT_EQ(brute_derived(4, s4.generators()).size(), 12u);

  const PermGroup c6(6, {cyc(6, {range(6)})});
  EXPECT_EQ(derived_subgroup(c6).order(), 1);
  EXPECT_TRUE(is_abelian(c6));
  EXPECT_EQ(center(c6).order(), 6);
  EXPECT_EQ(center(s4).order(), 1);
  EXPECT_FALSE(is_simple(s4));
  EXPECT_TRUE(is_simple(PermGroup(5, {cyc(5, {range(5)}), cyc(5, {{0, 1, 2}})})));
}

TEST(OrbitStabilizer, ProjectiveGraph) {
  const PermGroup aut = pi_automorphisms();
  const auto vertex = aut.orbit_and_stabilizer(0);
  EXPECT_EQ(vertex.orbit.size(), 6u);
  EXPECT_EQ(vertex.stabilizer_order, 10);
  const auto face = aut.orbit_and_stabilizer(6);
  EXPECT_EQ(face.orbit.size(), 10u);
  EXPECT_EQ(face.stabilizer_order, 6);
  // stabilizer order counted directly
  std::size_t fixing = 0;
  for (const auto &e : aut.elements()) fixing += e(0) == 0;
  EXPECT_EQ(fixing, 10u);

  const auto trivial = PermGroup(4, {}).orbit_and_stabilizer(2);
  EXPECT_EQ(trivial.orbit, std::vector<int>{2});
  EXPECT_EQ(trivial.stabilizer_order, 1);
  EXPECT_EQ(orbit_ids(16, aut.generators()), (std::vector<int>{0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}));
}

TEST(Actions, IdentityInducesIdentity) {
  const auto ico = build_icosahedron();
  EXPECT_TRUE(induced_vertex_face_action(Permutation::identity(12), ico).is_identity());
  const auto pairing = antipodal_pairing(ico);
  EXPECT_TRUE(projectivize_action(Permutation::identity(32), pairing).is_identity());
}

TEST(Actions, RotationsActOnTheVertexFaceGraph) {
  const auto ico = build_icosahedron();
  const Graph gamma = vertex_face_graph(ico);
  const PermGroup rot = rotation_group(ico);
  for (const auto &r : rot.generators()) {
    const Permutation induced = induced_vertex_face_action(r, ico);
    EXPECT_TRUE(is_automorphism(gamma, induced.images()));
  }
  // a five-fold rotation fixes its two axis vertices and no face
  bool checked = false;
  for (const auto &r : rot.elements()) {
    if (r.order() != 5) continue;
    const Permutation induced = induced_vertex_face_action(r, ico);
    int fixed_vertices = 0, fixed_faces = 0;
    for (int v = 0; v < 12; ++v) fixed_vertices += induced(v) == v;
    for (int f = 12; f < 32; ++f) fixed_faces += induced(f) == f;
    EXPECT_EQ(fixed_vertices, 2);
    EXPECT_EQ(fixed_faces, 0);
    checked = true;
  }
  EXPECT_TRUE(checked);
}

TEST(Actions, ProjectivizationIsAnInjectiveHomomorphismOnRotations) {
  const auto ico = build_icosahedron();
  const auto pairing = antipodal_pairing(ico);
  const Graph pi = projective_vertex_face_graph(ico).graph;
  const auto rotations = rotation_group(ico).elements();
  std::set<Permutation> images;
  for (const auto &r : rotations) {
    const Permutation img = projective_image(r, ico, pairing);
    EXPECT_TRUE(is_automorphism(pi, img.images()));
    images.insert(img);
  }
  EXPECT_EQ(images.size(), 60u);
  std::mt19937 rng(5);
  std::uniform_int_distribution<std::size_t> pick(0, rotations.size() - 1);
  for (int trial = 0; trial < 50; ++trial) {
    const auto &a = rotations[pick(rng)];
    const auto &b = rotations[pick(rng)];
    EXPECT_EQ(projective_image(a * b, ico, pairing), projective_image(a, ico, pairing) * projective_image(b, ico, pairing));
  }
  EXPECT_TRUE(projective_image(central_inversion(pairing), ico, pairing).is_identity());
}

TEST(Actions, Errors) {
  const auto ico = build_icosahedron();
  const auto pairing = antipodal_pairing(ico);
  EXPECT_THROW(induced_vertex_face_action(cyc(12, {{0, 1}}), ico), NotASkeletonAutomorphism);
  EXPECT_THROW(induced_vertex_face_action(Permutation::identity(11), ico), error);
  EXPECT_THROW(induced_vertex_face_action(cyc(6, {{2, 3}}), oracle::four_meridian_map()), FaceNotPreserved);
  EXPECT_THROW(projectivize_action(cyc(32, {{0, 1}}), pairing), PairingNotRespected);
}
