#include <gtest/gtest.h>

#include <random>

#include "gtmod/analysis.hpp"
#include "gtmod/singular_module.hpp"
#include "gtmod/verify.hpp"

using namespace gtmod;

namespace {

SeedTableau n3_t1() { return reference_seeds()[0].seed; }

ModuleElement unit(const CanonicalBasisVector& b) { return {{b, ExactScalar(1)}}; }

LaurentJet random_poly(const JetContext& ctx, std::mt19937_64& rng) {
  std::vector<LaurentJet::Term> terms;
  for (int i = 0; i < 6; ++i) {
    Exponents e{};
    for (int r = 0; r < ctx.t; ++r) e[r] = static_cast<std::int16_t>(rng() % 3);
    terms.push_back({e, ExactScalar(static_cast<std::int64_t>(rng() % 9) - 4, 1 + rng() % 3)});
  }
  return jet_from_terms(ctx, terms);
}

}  // namespace

TEST(Symbolize, ZeroShiftReadsTheSeed) {
  for (const auto& [name, seed] : reference_seeds()) {
    JetContext ctx(seed.t(), 6);
    TableauPoint<LaurentJet> x = symbolize(seed, IntegerPattern(seed.n()), ctx);
    for (int i = 1; i <= seed.n(); ++i)
      for (int j = 1; j <= i; ++j) EXPECT_EQ(jet_read(x.at(i, j), Exponents{}), seed.at(i, j)) << name;
  }
}

TEST(DividedDifferences, ProductsWithVanishingPolynomials) {
  JetContext ctx(3, 8);
  for (int r = 1; r <= 3; ++r) EXPECT_EQ(dd_extract(p_delta(ctx, 1u << (r - 1)), 1u << (r - 1)), ExactScalar(1));
  std::mt19937_64 rng(21);
  for (int rep = 0; rep < 20; ++rep) {
    LaurentJet f = random_poly(ctx, rng);
    for (std::uint32_t D = 0; D < 8; ++D)
      for (std::uint32_t I = 0; I < 8; ++I) {
        ExactScalar got = dd_extract(p_delta(ctx, D) * f, I);
        if ((D & I) != D)
          EXPECT_TRUE(got.is_zero());
        else
          EXPECT_EQ(got, dd_extract(f, I & ~D));
      }
  }
}

TEST(DividedDifferences, Definition) {
  JetContext ctx(2, 8);
  EXPECT_TRUE(divided_difference(jet_const(5, ctx), 1u).is_zero());
  EXPECT_TRUE(divided_difference(jet_const(5, ctx), 3u).is_zero());
  EXPECT_EQ(jet_read(divided_difference(jet_var(1, ctx), 1u), Exponents{}), ExactScalar(1));
  std::mt19937_64 rng(8);
  for (int rep = 0; rep < 20; ++rep) {
    LaurentJet f = random_poly(ctx, rng);
    for (std::uint32_t D = 1; D < 4; ++D) {
      LaurentJet fd = divided_difference(f, D);
      for (int s = 0; s < 2; ++s)
        if (D & (1u << s)) {
          EXPECT_TRUE(jets_agree(jet_twist(fd, 1u << s), fd));
        }
    }
  }
}

TEST(Action, DiagonalGeneratorsGiveWeights) {
  for (const auto& [name, seed] : reference_seeds()) {
    if (seed.n() > 4) continue;
    SingularModule m(seed);
    for (const auto& b : sample_vectors(seed, 10, 2, 3)) {
      TableauPoint<ExactScalar> w = seed.shifted(b.pattern);
      for (int k = 1; k <= seed.n(); ++k) EXPECT_EQ(m.act({k, k}, b), scaled(unit(b), e_diag(w, k))) << name;
      EXPECT_EQ(m.act_gamma(1, 1, b), scaled(unit(b), w.at(1, 1)));
    }
  }
  SingularModule m(n3_t1());
  const CanonicalBasisVector top{0, IntegerPattern(3)};
  EXPECT_EQ(m.act({1, 1}, top), scaled(unit(top), n3_t1().at(1, 1)));
}

TEST(Action, AgreesWithTheOracleOnEveryCoefficient) {
  ActionOptions opt;
  opt.audit_rate = 1.0;
  for (const auto& [name, seed] : reference_seeds()) {
    SingularModule m(seed, opt);
    for (const auto& b : sample_vectors(seed, seed.n() >= 5 ? 1 : 4, 2, 5))
      for (int r = 1; r <= seed.n(); ++r)
        for (int s = 1; s <= seed.n(); ++s) m.act({r, s}, b);
    EXPECT_GT(m.audit().sampled, 0) << name;
    EXPECT_EQ(m.audit().mismatches, 0) << name << (m.audit().failures.empty() ? "" : m.audit().failures[0]);
  }
}

TEST(Action, FastPathMatchesLiteralJets) {
  ActionOptions literal;
  literal.cancel_monomials = false;
  for (const auto& [name, seed] : reference_seeds()) {
    if (seed.n() > 4) continue;
    SingularModule fast(seed), slow(seed, literal);
    for (const auto& b : sample_vectors(seed, 8, 2, 13))
      for (int r = 1; r <= seed.n(); ++r)
        for (int s = 1; s <= seed.n(); ++s) EXPECT_EQ(fast.act({r, s}, b), slow.act({r, s}, b)) << name;
  }
}

TEST(Action, RawFormulaRespectsSignRelations) {
  SeedTableau seed = n3_t1();
  SingularModule m(seed);
  IntegerPattern z(3);
  z.set(2, 1, -2);
  Canonical c = canonicalize(seed, 1u, z);
  ASSERT_EQ(c.sign, -1);
  for (int r = 1; r <= 3; ++r)
    for (int s = 1; s <= 3; ++s)
      EXPECT_EQ(m.act_raw({r, s}, 1u, z), scaled(m.act({r, s}, c.vector), ExactScalar(c.sign)));
}

TEST(Action, BracketOnSamples) {
  SeedTableau seed = n3_t1();
  SingularModule m(seed);
  for (const auto& b : sample_vectors(seed, 10, 2, 17))
    for (int a = 1; a <= 3; ++a)
      for (int c = 1; c <= 3; ++c)
        for (int d = 1; d <= 3; ++d)
          for (int e = 1; e <= 3; ++e) {
            const Generator x{a, c}, y{d, e};
            GlElement comm{{ExactScalar(1), {x, y}}, {ExactScalar(-1), {y, x}}};
            EXPECT_EQ(m.act_element(comm, unit(b)), m.act_element(bracket(x, y), unit(b)));
          }
}

TEST(Action, GenericSeedMatchesGenericFormula) {
  SeedTableau seed = generic_seeds().front().seed;
  SingularModule m(seed);
  for (const auto& b : window_vectors(seed, 1)) {
    TableauPoint<ExactScalar> x = seed.point();
    for (int r = 1; r <= 3; ++r)
      for (int s = 1; s <= 3; ++s) {
        GenericElement want = generic_act(r, s, b.pattern, x);
        ModuleElement got = m.act({r, s}, b);
        ASSERT_EQ(got.size(), want.size());
        for (const auto& [v, c] : got) EXPECT_EQ(want.at(v.pattern), c);
      }
  }
}

TEST(Gamma, JordanStructureForOnePair) {
  SeedTableau seed = n3_t1();
  SingularModule m(seed);
  IntegerPattern z(3);
  z.set(2, 1, 1);
  const CanonicalBasisVector d{1u, z}, plain = canonicalize(seed, 0u, z).vector;
  ASSERT_TRUE(is_canonical(seed, d.index, d.pattern));
  const ExactScalar g = m.gamma_value(2, 2, z);
  ModuleElement once = m.act_gamma(2, 2, d) - scaled(unit(d), g);
  ASSERT_EQ(once.size(), 1u);
  EXPECT_EQ(once.begin()->first, plain);
  EXPECT_FALSE(once.begin()->second.is_zero());
  EXPECT_TRUE((m.act_gamma(2, 2, once) - scaled(once, g)).empty());
  EXPECT_EQ(geometric_multiplicity(m, z, 2, 2), 2);
}

TEST(Gamma, ClosedFormEqualsWordSum) {
  for (const auto& [name, seed] : reference_seeds()) {
    if (seed.n() > 4) continue;
    SingularModule m(seed);
    for (const auto& b : sample_vectors(seed, 5, 2, 23))
      for (int mm = 1; mm <= 3; ++mm)
        for (int k = 1; k <= mm; ++k) EXPECT_EQ(m.act_element(casimir(mm, k), unit(b)), m.act_gamma(mm, k, b)) << name;
  }
}

TEST(Verma, LoweringFromTheTopVector) {
  SingularModule m(verma_seed(3, {ExactScalar(0), ExactScalar(1, 2)}));
  const CanonicalBasisVector top{0, IntegerPattern(3)};
  ModuleElement e = m.act({2, 1}, top);
  IntegerPattern down(3);
  down.set(1, 1, -1);
  bool found = false;
  for (const auto& [b, c] : e)
    if (b.pattern == down && !c.is_zero()) found = true;
  EXPECT_TRUE(found);
  EXPECT_TRUE(m.act({1, 2}, top).empty());
  EXPECT_TRUE(m.act({2, 3}, top).empty());
}
