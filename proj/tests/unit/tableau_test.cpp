#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "gtmod/errors.hpp"
#include "gtmod/tableau.hpp"

using namespace gtmod;

namespace {

std::vector<ExactScalar> entries(std::initializer_list<std::initializer_list<const char*>> rows_top_first) {
  std::vector<std::vector<ExactScalar>> rows;
  for (const auto& r : rows_top_first) {
    rows.emplace_back();
    for (const char* x : r) rows.back().push_back(ExactScalar::parse(x));
  }
  std::vector<ExactScalar> out;
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) out.insert(out.end(), it->begin(), it->end());
  return out;
}

std::vector<std::string> issue_kinds(const std::function<void()>& f) {
  try {
    f();
  } catch (const SeedValidationError& e) {
    std::vector<std::string> kinds;
    for (const auto& i : e.issues) kinds.push_back(i.kind);
    return kinds;
  }
  return {};
}

SeedTableau n3_seed() {
  return validate_seed(3, entries({{"0", "1", "1/2"}, {"0", "0"}, {"0"}}), {{2, 1, 2}});
}

// |S~_m| = m (identity and the transpositions (1 q)), one factor per row min..max-1.
long phi_size_reference(int k, int l) {
  long p = 1;
  for (int m = std::min(k, l); m <= std::max(k, l) - 1; ++m) p *= m;
  return p;
}

}  // namespace

TEST(Seed, ValidSingularSeed) {
  SeedTableau s = n3_seed();
  EXPECT_EQ(s.t(), 1);
  EXPECT_EQ(s.pair(1), (Triple{2, 1, 2}));
  EXPECT_EQ(s.pair_of(2, 1), 1);
  EXPECT_EQ(s.pair_side(2, 2), -1);
}

TEST(Seed, HiddenPairAndTriple) {
  auto hidden = issue_kinds([] { validate_seed(3, entries({{"0", "1", "1/2"}, {"0", "0"}, {"0"}}), {}); });
  EXPECT_NE(std::find(hidden.begin(), hidden.end(), "HiddenSingularPair"), hidden.end());
  auto triple = issue_kinds([] {
    validate_seed(4, entries({{"0", "1/2", "1/3", "1/5"}, {"0", "1", "2"}, {"1/7", "2/7"}, {"3/7"}}), {});
  });
  EXPECT_NE(std::find(triple.begin(), triple.end(), "SingularTriple"), triple.end());
  auto shape = issue_kinds([] { validate_seed(3, {ExactScalar(1)}, {}); });
  EXPECT_EQ(shape, std::vector<std::string>{"BadStructure"});
}

TEST(Seed, NormalizeMovesIntegerDifferenceIntoShift) {
  NormalizedSeed ns = normalize_seed(3, entries({{"1/3", "1/5", "1/7"}, {"3", "1"}, {"1/2"}}));
  EXPECT_EQ(ns.seed.at(2, 1), ExactScalar(1));
  EXPECT_EQ(ns.seed.at(2, 2), ExactScalar(1));
  EXPECT_EQ(ns.z0.at(2, 1), 2);
  EXPECT_EQ(ns.z0.at(2, 2), 0);
  EXPECT_EQ(ns.seed.t(), 1);

  NormalizedSeed generic = normalize_seed(3, entries({{"1/3", "1/5", "1/7"}, {"1/2", "1/9"}, {"1/2"}}));
  EXPECT_EQ(generic.seed.t(), 0);
  EXPECT_TRUE(generic.z0.is_zero());

  NormalizedSeed equal = normalize_seed(3, entries({{"1/3", "1/5", "1/7"}, {"0", "0"}, {"1/2"}}));
  EXPECT_EQ(equal.seed.t(), 1);
  EXPECT_TRUE(equal.z0.is_zero());
}

TEST(Group, ActionAndInverse) {
  TableauPoint<ExactScalar> w = n3_seed().point();
  w.at(2, 1) = ExactScalar(5);
  GroupElement g = transposition(3, 2, 1, 2);
  TableauPoint<ExactScalar> u = group_act(g, w);
  EXPECT_EQ(u.at(2, 1), w.at(2, 2));
  EXPECT_EQ(u.at(2, 2), ExactScalar(5));
  EXPECT_EQ(group_act(GroupElement::identity(3), w).entries, w.entries);
  // every element of S_3 x S_2 x S_1
  std::vector<int> p3{1, 2, 3};
  do {
    for (int sw = 0; sw < 2; ++sw) {
      GroupElement h = GroupElement::identity(3);
      h.perm[2] = p3;
      if (sw) h.perm[1] = {2, 1};
      EXPECT_EQ(group_act(h, group_act(inverse(h), w)).entries, w.entries);
      EXPECT_TRUE(compose(h, inverse(h)).is_identity());
    }
  } while (std::next_permutation(p3.begin(), p3.end()));
}

TEST(Group, PhiSizes) {
  EXPECT_EQ(phi_elements(2, 2).size(), 1u);
  for (int k = 1; k <= 5; ++k)
    for (int l = 1; l <= 5; ++l)
      EXPECT_EQ(static_cast<long>(phi_elements(k, l).size()), phi_size_reference(k, l)) << k << "," << l;
  EXPECT_EQ(phi_elements(1, 3).size(), 2u);
  EXPECT_EQ(phi_elements(1, 4).size(), 6u);
}

TEST(Pattern, Epsilon) {
  EXPECT_TRUE(epsilon(3, 2, 2).is_zero());
  EXPECT_EQ(epsilon(3, 1, 2), delta(3, 1, 1));
  EXPECT_EQ(epsilon(3, 2, 1), -delta(3, 1, 1));
  EXPECT_EQ(epsilon(4, 1, 3), delta(4, 1, 1) + delta(4, 2, 1));
}

TEST(Canonical, SignRelations) {
  SeedTableau s = n3_seed();
  IntegerPattern z(3);
  z.set(2, 1, -2);
  Canonical c = canonicalize(s, 1u, z);
  EXPECT_EQ(c.sign, -1);
  EXPECT_EQ(c.vector.pattern.at(2, 1), 0);
  EXPECT_EQ(c.vector.pattern.at(2, 2), -2);

  IntegerPattern crit(3);
  crit.set(2, 1, 1);
  crit.set(2, 2, 1);
  EXPECT_EQ(canonicalize(s, 1u, crit).sign, 0);

  Canonical plain = canonicalize(s, 0u, z);
  EXPECT_EQ(plain.sign, 1);
  EXPECT_LE(plain.vector.pattern.at(2, 1) - plain.vector.pattern.at(2, 2), 0);
  EXPECT_TRUE(is_canonical(s, plain.vector.index, plain.vector.pattern));
}

TEST(Canonical, TauStarIsAnInvolution) {
  SeedTableau s = validate_seed(
      4, entries({{"1/7", "2/5", "-3/11", "5/13"}, {"1/2", "1/2", "1/5"}, {"1/3", "1/3"}, {"2/9"}}),
      {{3, 1, 2}, {2, 1, 2}});
  for (int k = 1; k <= 4; ++k)
    for (int l = 1; l <= 4; ++l)
      for (const auto& sigma : phi_elements(k, l))
        for (std::uint32_t mask = 0; mask <= s.all_pairs(); ++mask)
          EXPECT_EQ(tau_star(s, mask, tau_star(s, mask, sigma, k, l), k, l), sigma);
}

TEST(Canonical, TauStarCaseWhereRowOneIsInThePair) {
  SeedTableau s = n3_seed();
  for (const auto& sigma : phi_elements(1, 3)) {
    if (sigma.q[2] != 2) continue;
    EXPECT_EQ(tau_star(s, 1u, sigma, 1, 3).q[2], 1);
  }
}

TEST(Classify, CriticalCounts) {
  SeedTableau s = validate_seed(
      4, entries({{"1/7", "2/5", "-3/11", "5/13"}, {"1/2", "1/2", "1/5"}, {"1/3", "1/3"}, {"2/9"}}),
      {{3, 1, 2}, {2, 1, 2}});
  IntegerPattern z(4);
  EXPECT_EQ(critical_count(s, z), 2);
  z.set(3, 1, 1);
  EXPECT_EQ(critical_count(s, z), 1);
  const int row2 = s.pair(1).k == 2 ? 1 : 2;
  EXPECT_EQ(critical_mask(s, z), 1u << (row2 - 1));
  SeedTableau g = validate_seed(3, entries({{"1/3", "1/5", "1/7"}, {"1/2", "1/9"}, {"1/2"}}), {});
  EXPECT_TRUE(classify(g, IntegerPattern(3)).is_generic);
}

TEST(Classify, StandardTableau) {
  TableauPoint<ExactScalar> w{2, {ExactScalar(0), ExactScalar(1), ExactScalar(-1)}};
  EXPECT_TRUE(is_standard(w));
  w.at(1, 1) = ExactScalar(2);
  EXPECT_FALSE(is_standard(w));
}
