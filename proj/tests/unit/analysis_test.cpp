#include <gtest/gtest.h>

#include "gtmod/analysis.hpp"
#include "gtmod/errors.hpp"
#include "gtmod/verify.hpp"

using namespace gtmod;

namespace {

SeedTableau seed_named(const std::string& name) {
  for (auto list : {reference_seeds(), extra_seeds(), generic_seeds()})
    for (auto& s : list)
      if (s.name == name) return s.seed;
  throw std::runtime_error("no seed " + name);
}

// Exhaustive count over the window: number of patterns sharing the fingerprint of z.
long brute_fiber(const SeedTableau& seed, const IntegerPattern& z, int B) {
  FingerprintTable table(seed);
  const Fingerprint f = table.fingerprint(z);
  long count = 0;
  for_each_pattern(seed.n(), B, [&](const IntegerPattern& y) { count += table.fingerprint(y) == f; });
  return count;
}

}  // namespace

TEST(Fibers, MultiplicityByCriticalCount) {
  SeedTableau t1 = seed_named("n3-t1");
  IntegerPattern z(3);
  z.set(2, 1, 1);
  EXPECT_EQ(fiber_multiplicity(t1, z).count, 2);
  SeedTableau t2 = seed_named("n4-t2");
  IntegerPattern y(4);
  EXPECT_EQ(fiber_multiplicity(t2, y).count, 1);
  y.set(3, 1, 1);
  EXPECT_EQ(fiber_multiplicity(t2, y).count, 2);
  y.set(2, 2, -1);
  EXPECT_EQ(fiber_multiplicity(t2, y).count, 4);
}

TEST(Fibers, WindowAuditMatchesBruteForce) {
  SeedTableau seed = seed_named("n3-t1");
  FiberAuditReport rep = fiber_dimension_audit(seed, 2);
  EXPECT_TRUE(rep.ok);
  EXPECT_EQ(rep.patterns, 125);
  for_each_pattern(3, 1, [&](const IntegerPattern& z) {
    EXPECT_EQ(brute_fiber(seed, z, 3), 1L << (seed.t() - critical_count(seed, z)));
  });
}

TEST(Character, GenericAndSingularTables) {
  for (const auto& row : character_window(seed_named("n3-generic"), 1)) EXPECT_EQ(row.dimension, 1);
  for (const auto& row : character_window(seed_named("n3-t1"), 1)) {
    EXPECT_EQ(row.dimension, row.expected);
    EXPECT_EQ(row.expected, row.critical ? 1 : 2);
  }
  EXPECT_TRUE(character_window(seed_named("n3-t1"), -1).empty());
}

TEST(Jordan, GeometricMultiplicities) {
  SingularModule one(seed_named("n3-t1"));
  IntegerPattern z(3);
  z.set(2, 1, 1);
  EXPECT_EQ(geometric_multiplicity(one, z, 2, 2), 2);
  EXPECT_EQ(geometric_multiplicity(one, IntegerPattern(3), 2, 2), 1);
  SeedTableau same_row = seed_named("n5-t2-same-row");
  SingularModule two(same_row);
  IntegerPattern y(5);
  y.set(4, 1, 1);
  y.set(4, 3, 1);
  EXPECT_EQ(expected_geometric_multiplicity(same_row, y, 4), 3);
  EXPECT_EQ(geometric_multiplicity(two, y, 4, 2), 3);
}

TEST(Iso, Criterion) {
  SeedTableau a = seed_named("n3-generic");
  EXPECT_TRUE(iso_check(a, a));
  auto rows = [](const char* mid) {
    return make_seed(3, {{"0", mid, "1"}, {"1/5", "2/7"}, {"1/3"}}, {});
  };
  EXPECT_FALSE(iso_check(rows("1/2"), rows("1/3")));
  SeedTableau shifted = make_seed(3, {{"1/7", "2/5", "-3/11"}, {"4/3", "3/4"}, {"6/5"}}, {});
  EXPECT_TRUE(iso_check(a, shifted));
  SeedTableau big = make_seed(6, {{"0", "1/2", "1/3", "1/5", "1/7", "1/11"},
                                  {"1/13", "1/17", "1/19", "1/23", "1/29"},
                                  {"2/13", "2/17", "2/19", "2/23"},
                                  {"3/13", "3/17", "3/19"},
                                  {"4/13", "4/17"},
                                  {"5/13"}},
                              {});
  EXPECT_THROW(iso_check(big, big), RankTooLarge);
}

TEST(Reach, GenericWindowIsStronglyConnected) {
  SingularModule m(seed_named("n3-generic"));
  ReachGraph g = reachability(m, CanonicalBasisVector{0, IntegerPattern(3)}, 1);
  EXPECT_EQ(g.components, 1);
  EXPECT_FALSE(g.caveat.empty());
  for (bool r : g.reached) EXPECT_TRUE(r);
  EXPECT_NE(graph_to_dot(g).find("digraph"), std::string::npos);
}

TEST(Verma, RankThree) {
  VermaReport r = verma_demo(3, {ExactScalar(0), ExactScalar(1, 2)});
  EXPECT_TRUE(r.highest_weight);
  EXPECT_EQ(r.weight, r.expected_weight);
  EXPECT_EQ(r.weight[0], ExactScalar(0));
  EXPECT_EQ(r.expected_degree, 2);
  EXPECT_EQ(r.fiber_size, 2);
  EXPECT_EQ(r.fiber_reached, 2);
  EXPECT_EQ(r.gt_degree, 2);
  EXPECT_EQ(r.geometric, std::vector<int>{2});
  EXPECT_TRUE(r.ok);
  EXPECT_THROW(verma_seed(3, {ExactScalar(0), ExactScalar(1)}), Error);
}

TEST(Verma, WeightSpacesOfTheGeneratedSubmodule) {
  SingularModule m(verma_seed(3, {ExactScalar(0), ExactScalar(1, 2)}));
  auto spaces = lowering_weight_spaces(m, CanonicalBasisVector{0, IntegerPattern(3)}, 2);
  // Kostant partition function for gl(3): P(c1, c2) = 1 + min(c1, c2).
  for (const auto& [c, basis] : spaces) EXPECT_EQ(span_dimension(basis), 1 + std::min(c[0], c[1]));
  EXPECT_EQ(span_dimension({}), 0);
}
