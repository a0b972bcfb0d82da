#include "hemi/mu_search.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace hemi;

namespace {

/// The certificate must decode, have the target group, and no graph on fewer
/// vertices may have an automorphism group of the same order.
void expect_certificate(const SearchReport &r, const GroupName &target) {
  ASSERT_TRUE(r.found_n.has_value()) << target.to_string();
  const Graph g = graph6_decode(r.certificate);
  EXPECT_EQ(g.order(), *r.found_n);
  const PermGroup aut = automorphism_group(g);
  EXPECT_EQ(identify_group(aut), target);
  EXPECT_EQ(oracle::automorphisms(g).size(), target.order());
  EXPECT_EQ(PermGroup(g.order(), r.certificate_generators).order(), aut.order());
  for (const auto &gen : r.certificate_generators) EXPECT_TRUE(is_automorphism(g, gen.images()));
  for (int m = 1; m < *r.found_n; ++m)
    for (const auto &h : oracle::all_classes(m)) EXPECT_NE(oracle::automorphisms(h).size(), target.order());
}

} // namespace

TEST(MuSearch, Trivial) {
  const auto r = mu_search(GroupName::trivial(), 7);
  EXPECT_EQ(r.found_n, 1);
  EXPECT_EQ(r.certificate, "@");
  expect_certificate(r, GroupName::trivial());
}

TEST(MuSearch, C2) {
  const auto r = mu_search(GroupName::cyclic(2), 7);
  EXPECT_EQ(r.found_n, 2);
  EXPECT_EQ(r.certificate, "A?");
  expect_certificate(r, GroupName::cyclic(2));
}

TEST(MuSearch, S3) {
  const auto r = mu_search(*GroupName::parse("S3"), 7);
  EXPECT_EQ(r.found_n, 3);
  expect_certificate(r, GroupName::dihedral(3));
}

TEST(MuSearch, C3IsNotRealisedOnSevenVertices) {
  const auto r = mu_search(GroupName::cyclic(3), 7);
  EXPECT_FALSE(r.found_n.has_value());
  EXPECT_EQ(r.classes_per_n, (std::vector<std::size_t>{1, 2, 4, 11, 34, 156, 1044}));
  const Json j = r.to_json();
  EXPECT_EQ(j["result"], "not_found");
  EXPECT_EQ(j["not_found_up_to"], 7);
}

TEST(Enumeration, ClassCountsMatchBruteForce) {
  std::vector<std::size_t> counts;
  enumerate_graphs(
      6, [](int, const ClassRepresentative &) {},
      [&](int, std::size_t c) {
        counts.push_back(c);
        return true;
      });
  ASSERT_EQ(counts.size(), 6u);
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(counts[n - 1], oracle::all_classes(n).size()) << n;
}

TEST(Enumeration, RepresentativesArePairwiseNonIsomorphic) {
  std::map<int, std::set<std::string>> keys;
  std::map<int, int> visits;
  enumerate_graphs(
      6,
      [&](int n, const ClassRepresentative &rep) {
        keys[n].insert(oracle::min_relabeled_key(rep.graph));
        ++visits[n];
        EXPECT_EQ(rep.automorphism_order, oracle::automorphisms(rep.graph).size());
      },
      [](int, std::size_t) { return true; });
  for (const auto &[n, k] : keys) EXPECT_EQ(static_cast<int>(k.size()), visits[n]) << n;
}

TEST(MuSearch, Errors) {
  EXPECT_THROW(mu_search(GroupName{}, 5), TargetNotIdentifiable);
  EXPECT_THROW(mu_search(GroupName::cyclic(2), 8), error);
  EXPECT_THROW(mu_search(GroupName::cyclic(2), 0), error);
}
