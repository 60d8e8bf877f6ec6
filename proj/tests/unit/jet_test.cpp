#include <gtest/gtest.h>

#include <map>
#include <random>

#include "gtmod/errors.hpp"
#include "gtmod/jet.hpp"

using namespace gtmod;

namespace {

Exponents ex(std::initializer_list<int> v) {
  Exponents e{};
  int r = 0;
  for (int x : v) e[r++] = static_cast<std::int16_t>(x);
  return e;
}

// Reference: dense polynomial product keyed by exponent tuples, no truncation.
using Dense = std::map<std::vector<int>, mpq_class>;

Dense dense_of(const LaurentJet& f) {
  Dense out;
  for (const auto& term : f.terms())
    out[std::vector<int>(term.e.begin(), term.e.begin() + f.context().t)] = term.c.to_mpq();
  return out;
}

Dense dense_mul(const Dense& a, const Dense& b) {
  Dense out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      for (std::size_t r = 0; r < e.size(); ++r) e[r] = ea[r] + eb[r];
      out[e] += ca * cb;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

LaurentJet random_poly(const JetContext& ctx, std::mt19937_64& rng, int degree) {
  std::vector<LaurentJet::Term> terms;
  for (int i = 0; i < 5; ++i) {
    Exponents e{};
    for (int r = 0; r < ctx.t; ++r) e[r] = static_cast<std::int16_t>(rng() % (degree + 1));
    terms.push_back({e, ExactScalar(static_cast<std::int64_t>(rng() % 11) - 5, 1 + rng() % 4)});
  }
  return jet_from_terms(ctx, terms);
}

}  // namespace

TEST(Jet, ConstantsAndVariables) {
  JetContext ctx(2, 6);
  EXPECT_TRUE(jet_const(0, ctx).is_zero());
  EXPECT_EQ(jet_read(jet_const(ExactScalar(3, 2), ctx), ex({0, 0})), ExactScalar(3, 2));
  LaurentJet s1 = jet_var(1, ctx);
  EXPECT_EQ((s1 * s1).coefficient(ex({2, 0})), ExactScalar(1));
  EXPECT_TRUE((s1 + jet_const(-1, ctx) * s1).is_zero());
  EXPECT_THROW(jet_var(3, ctx), IndexOutOfRange);
  EXPECT_THROW(JetContext(2, 1), IndexOutOfRange);
}

TEST(Jet, DifferenceOfSquares) {
  JetContext ctx(1, 6);
  LaurentJet s = jet_var(1, ctx);
  LaurentJet p = (s + ExactScalar(1)) * (-s + ExactScalar(1));
  EXPECT_TRUE(jets_agree(p, jet_from_terms(ctx, {{ex({0}), 1}, {ex({2}), -1}})));
}

TEST(Jet, InverseOfTwoPlusSIsGeometric) {
  JetContext ctx(1, 8);
  LaurentJet f = jet_inv(jet_var(1, ctx) + ExactScalar(2));
  for (int k = 0; k <= f.validity()[0]; ++k) {
    ExactScalar want(k % 2 ? -1 : 1, std::int64_t{1} << (k + 1));
    EXPECT_EQ(jet_read(f, ex({k})), want) << "k=" << k;
  }
  EXPECT_GE(f.validity()[0], 6);
}

TEST(Jet, InverseOfMonomialAndNonUnits) {
  JetContext ctx(2, 6);
  LaurentJet inv1 = jet_inv(jet_var(1, ctx));
  EXPECT_EQ(inv1.coefficient(ex({-1, 0})), ExactScalar(1));
  EXPECT_EQ(jet_read(inv1 * jet_var(1, ctx), ex({0, 0})), ExactScalar(1));
  EXPECT_THROW(jet_inv(jet_var(1, ctx) + jet_var(2, ctx)), NotInvertible);
  EXPECT_THROW(jet_inv(jet_const(0, ctx)), ZeroDivision);
}

TEST(Jet, InverseAfterCancellation) {
  // (a + s) - (a - s) = 2 s and (1/s - 1/s) + 5 both reach jet_inv with
  // structural lower bounds below their true lowest terms.
  JetContext ctx(2, 6);
  LaurentJet s1 = jet_var(1, ctx);
  LaurentJet d = (s1 + ExactScalar(3)) - (-s1 + ExactScalar(3));
  LaurentJet q = jet_inv(d);
  EXPECT_EQ(q.coefficient(ex({-1, 0})), ExactScalar(1, 2));
  LaurentJet pole = jet_inv(s1);
  LaurentJet c = (pole - pole) + ExactScalar(5) + jet_var(2, ctx);
  LaurentJet ci = jet_inv(c);
  EXPECT_EQ(jet_read(ci, ex({0, 0})), ExactScalar(1, 5));
  EXPECT_EQ(jet_read(ci, ex({0, 1})), ExactScalar(-1, 25));
}

TEST(Jet, RemovableSingularityAndPoles) {
  JetContext ctx(1, 6);
  LaurentJet two_s = jet_var(1, ctx) * ExactScalar(2);
  EXPECT_EQ(jet_read(two_s * jet_inv(two_s), ex({0})), ExactScalar(1));
  EXPECT_EQ(jet_read(jet_var(1, ctx) * ExactScalar(3) + ExactScalar(2), ex({0})), ExactScalar(2));
  EXPECT_THROW(jet_read(jet_inv(jet_var(1, ctx)) + ExactScalar(1), ex({0})), NotSmooth);
}

TEST(Jet, HalfDerivative) {
  JetContext ctx(1, 6);
  EXPECT_EQ(jet_read(jet_ddiff(jet_var(1, ctx), 1), ex({0})), ExactScalar(1, 2));
  LaurentJet d = jet_ddiff(jet_inv(jet_var(1, ctx)), 1);
  EXPECT_EQ(d.coefficient(ex({-2})), ExactScalar(-1, 2));
  EXPECT_TRUE(jet_ddiff(jet_const(7, ctx), 1).is_zero());
}

TEST(Jet, ReadingBeyondValidityIsPrecisionExhausted) {
  JetContext ctx(1, 3);
  LaurentJet f = jet_inv(jet_var(1, ctx) + ExactScalar(1));
  EXPECT_THROW(jet_read(f, ex({f.validity()[0] + 1})), PrecisionExhausted);
}

TEST(Jet, ContextMismatch) {
  EXPECT_THROW(jet_var(1, JetContext(1, 6)) + jet_var(1, JetContext(2, 6)), ContextMismatch);
}

TEST(Jet, ProductMatchesDenseReference) {
  std::mt19937_64 rng(11);
  JetContext ctx(3, 12);
  for (int i = 0; i < 300; ++i) {
    LaurentJet f = random_poly(ctx, rng, 3), g = random_poly(ctx, rng, 3);
    EXPECT_EQ(dense_of(f * g), dense_mul(dense_of(f), dense_of(g)));
  }
}

TEST(Jet, TwistFlipsOddPowers) {
  JetContext ctx(2, 6);
  LaurentJet f = jet_from_terms(ctx, {{ex({1, 0}), 2}, {ex({2, 1}), 3}, {ex({0, 0}), 1}});
  LaurentJet g = jet_twist(f, 1u);
  EXPECT_EQ(g.coefficient(ex({1, 0})), ExactScalar(-2));
  EXPECT_EQ(g.coefficient(ex({2, 1})), ExactScalar(3));
  EXPECT_TRUE(jets_agree(jet_twist(g, 1u), f));
}

TEST(Jet, InverseTimesUnitIsOne) {
  std::mt19937_64 rng(5);
  JetContext ctx(2, 6);
  for (int i = 0; i < 100; ++i) {
    LaurentJet f = random_poly(ctx, rng, 2) + ExactScalar(3 + static_cast<int>(rng() % 3) * 100);
    if (jet_read(f, ex({0, 0})).is_zero()) continue;
    LaurentJet p = f * jet_inv(f);
    for (int a = 0; a <= p.validity()[0]; ++a)
      for (int b = 0; b <= p.validity()[1]; ++b)
        EXPECT_EQ(jet_read(p, ex({a, b})), ExactScalar(a == 0 && b == 0 ? 1 : 0));
  }
}
