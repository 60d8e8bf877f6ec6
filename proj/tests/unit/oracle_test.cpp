#include <gtest/gtest.h>

#include <random>

#include "gtmod/coefficients.hpp"
#include "gtmod/errors.hpp"
#include "gtmod/expr.hpp"
#include "gtmod/rational_function.hpp"
#include "gtmod/singular_module.hpp"
#include "gtmod/verify.hpp"

using namespace gtmod;

namespace {

using RF = RationalFunction;

RF s(int t, int r) { return RF::variable(t, r); }
RF c(int t, std::int64_t p, std::int64_t q = 1) { return RF::constant(t, ExactScalar(p, q)); }

Polynomial random_poly(int t, std::mt19937_64& rng, int deg) {
  Polynomial p(t);
  for (int i = 0; i < 4; ++i) {
    Monomial m(t);
    for (auto& e : m) e = static_cast<int>(rng() % (deg + 1));
    p.add_term(m, ExactScalar(static_cast<std::int64_t>(rng() % 9) - 4, 1 + rng() % 3));
  }
  return p;
}

}  // namespace

TEST(Polynomial, GcdRecoversACommonFactor) {
  std::mt19937_64 rng(31);
  const Polynomial x = Polynomial::variable(2, 1), y = Polynomial::variable(2, 2);
  const Polynomial one = Polynomial::constant(2, ExactScalar(1));
  const Polynomial g = x * y + x.scaled(ExactScalar(3)) + one;
  const Polynomial a = x + y.scaled(ExactScalar(2)), b = x * x - y + one;
  EXPECT_EQ(gcd(a * g, b * g), g.monic());
  EXPECT_EQ(gcd(a, b), one);
  for (int i = 0; i < 30; ++i) {
    Polynomial p = random_poly(2, rng, 2), q = random_poly(2, rng, 2);
    if (p.is_zero() || q.is_zero()) continue;
    Polynomial h = gcd(p * q, q);
    EXPECT_EQ(h, q.monic());
    EXPECT_EQ(divide_exact(p * q, q), p);
  }
}

TEST(RationalFunction, ReducesAndDifferentiates) {
  EXPECT_EQ(s(1, 1) / s(1, 1), c(1, 1));
  EXPECT_EQ(rf_twist(s(1, 1), 1u), -s(1, 1));
  RF g = rf_inv(s(1, 1) + ExactScalar(2));
  EXPECT_EQ(rf_diff(g, 1), -(g * g));
  EXPECT_THROW(rf_inv(RF(1)), ZeroDivision);
  EXPECT_THROW(rf_eval_zero(rf_inv(s(1, 1))), PoleAtOrigin);
  EXPECT_EQ(rf_eval_zero((s(2, 1) + ExactScalar(3)) / (s(2, 2) + ExactScalar(2))), ExactScalar(3, 2));
}

TEST(RationalFunction, QuotientRule) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 40; ++i) {
    RF f(random_poly(2, rng, 2), Polynomial::constant(2, ExactScalar(1)));
    RF h = RF(random_poly(2, rng, 2), Polynomial::constant(2, ExactScalar(1))) + ExactScalar(7);
    if (h.is_zero()) continue;
    for (int r = 1; r <= 2; ++r) EXPECT_EQ(rf_diff(f / h, r), (rf_diff(f, r) * h - f * rf_diff(h, r)) / (h * h));
  }
}

TEST(Oracle, DerivativeOfProductsWithVanishingPolynomial) {
  std::mt19937_64 rng(51);
  for (int i = 0; i < 30; ++i) {
    RF f(random_poly(1, rng, 3), Polynomial::constant(1, ExactScalar(1)));
    EXPECT_EQ(oracle_dd(p_delta_rf(1, 1u) * f, 1u), rf_eval_zero(f));
  }
  EXPECT_TRUE(oracle_dd(c(1, 5), 1u).is_zero());
  TableauPoint<RF> w{2, {c(0, 3, 5), c(0, 1), c(0, 0)}};
  EXPECT_EQ(oracle_dd(gamma(w, 2, 1), 0u), ExactScalar(2));
  EXPECT_THROW(oracle_dd(rf_inv(s(1, 1)), 0u), PoleAtOrigin);
}

TEST(Oracle, GammaIsSmoothOnTheSingularLine) {
  SeedTableau seed = reference_seeds()[0].seed;
  TableauPoint<RF> x = symbolize_rf(seed, IntegerPattern(3));
  RF g = gamma(x, 2, 2);
  EXPECT_NO_THROW(rf_eval_zero(g));
  TableauPoint<LaurentJet> jx = symbolize(seed, IntegerPattern(3), JetContext(1, 6));
  EXPECT_EQ(dd_extract(gamma(jx, 2, 2), 0u), oracle_dd(g, 0u));
  EXPECT_EQ(dd_extract(gamma(jx, 2, 2), 1u), oracle_dd(g, 1u));
}

TEST(Oracle, JetAndRationalEvaluationAgreeOnRandomTrees) {
  std::mt19937_64 rng(61);
  for (const auto& [name, seed] : reference_seeds()) {
    if (seed.n() > 4) continue;
    for (int i = 0; i < 40; ++i) {
      ExprPtr e = random_smooth_expr(seed, rng, 5);
      IntegerPattern z(seed.n());
      RF rf = evaluate(*e, seed, symbolize_rf(seed, z));
      auto jet_at = [&](int K) { return evaluate(*e, seed, symbolize(seed, z, JetContext(seed.t(), K))); };
      LaurentJet jet = jet_at(8);
      for (std::uint32_t I = 0; I <= seed.all_pairs(); ++I) {
        ExactScalar got;
        try {
          got = dd_extract(jet, I);
        } catch (const PrecisionExhausted&) {
          got = dd_extract(jet_at(24), I);
        }
        EXPECT_EQ(got, oracle_dd(rf, I)) << name << " " << to_string(e);
      }
    }
  }
}
