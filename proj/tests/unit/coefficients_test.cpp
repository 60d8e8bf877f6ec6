#include <gtest/gtest.h>

#include <random>

#include "gtmod/coefficients.hpp"

using namespace gtmod;

namespace {

TableauPoint<ExactScalar> random_point(int n, std::mt19937_64& rng) {
  TableauPoint<ExactScalar> w{n, {}};
  for (int i = 0; i < tableau_size(n); ++i)
    w.entries.push_back(ExactScalar(static_cast<std::int64_t>(rng() % 97) - 48, 7 + rng() % 50));
  return w;
}

// Classical raising/lowering formulas for adjacent generators on T(w).
GenericElement classical(int r, int s, const TableauPoint<ExactScalar>& w) {
  GenericElement out;
  const int n = w.n;
  if (r == s) {
    ExactScalar d(r - 1);
    for (int i = 1; i <= r; ++i) d += w.at(r, i);
    for (int i = 1; i < r; ++i) d -= w.at(r - 1, i);
    add_term(out, IntegerPattern(n), d);
    return out;
  }
  const int k = std::min(r, s);
  for (int i = 1; i <= k; ++i) {
    ExactScalar num(1), den(1);
    for (int j = 1; j <= k; ++j)
      if (j != i) den *= w.at(k, i) - w.at(k, j);
    IntegerPattern z(n);
    if (r < s) {
      for (int j = 1; j <= k + 1; ++j) num *= w.at(k, i) - w.at(k + 1, j);
      z.set(k, i, 1);
      add_term(out, z, -num / den);
    } else {
      for (int j = 1; j <= k - 1; ++j) num *= w.at(k, i) - w.at(k - 1, j);
      z.set(k, i, -1);
      add_term(out, z, num / den);
    }
  }
  return out;
}

ExactScalar weyl(const std::vector<int>& lambda) {
  const int n = static_cast<int>(lambda.size());
  ExactScalar d(1);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) d *= ExactScalar(lambda[i] - lambda[j] + j - i, j - i);
  return d;
}

}  // namespace

TEST(Coefficients, SmallCases) {
  TableauPoint<ExactScalar> w{2, {ExactScalar(1, 3), ExactScalar(2), ExactScalar(-1, 2)}};
  EXPECT_EQ(e_coeff(w, 2, 1), ExactScalar(1));
  EXPECT_EQ(e_coeff(w, 1, 2), -(w.at(1, 1) - w.at(2, 1)) * (w.at(1, 1) - w.at(2, 2)));
  GenericElement g = generic_act(1, 2, IntegerPattern(2), w);
  ASSERT_EQ(g.size(), 1u);
  EXPECT_EQ(g.begin()->first, delta(2, 1, 1));
  EXPECT_EQ(g.begin()->second, e_coeff(w, 1, 2));
  EXPECT_THROW(e_coeff(w, 0, 1), IndexOutOfRange);
}

TEST(Coefficients, AdjacentGeneratorsMatchClassicalFormulas) {
  std::mt19937_64 rng(3);
  for (int n = 2; n <= 5; ++n)
    for (int rep = 0; rep < 10; ++rep) {
      TableauPoint<ExactScalar> w = random_point(n, rng);
      for (int k = 1; k < n; ++k) {
        EXPECT_EQ(generic_act(k, k + 1, IntegerPattern(n), w), classical(k, k + 1, w));
        EXPECT_EQ(generic_act(k + 1, k, IntegerPattern(n), w), classical(k + 1, k, w));
      }
      for (int k = 1; k <= n; ++k) EXPECT_EQ(generic_act(k, k, IntegerPattern(n), w), classical(k, k, w));
    }
}

TEST(Coefficients, GenericBracketClosure) {
  std::mt19937_64 rng(9);
  for (int n = 2; n <= 3; ++n) {
    TableauPoint<ExactScalar> w = random_point(n, rng);
    GenericElement t{{IntegerPattern(n), ExactScalar(1)}};
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b)
        for (int c = 1; c <= n; ++c)
          for (int d = 1; d <= n; ++d) {
            const Generator x{a, b}, y{c, d};
            GlElement lhs{{ExactScalar(1), {x, y}}, {ExactScalar(-1), {y, x}}};
            EXPECT_EQ(generic_act_element(lhs, t, w), generic_act_element(bracket(x, y), t, w))
                << "[E" << a << b << ", E" << c << d << "]";
          }
  }
}

TEST(Coefficients, BracketFormula) {
  GlElement b = bracket({1, 2}, {2, 1});
  ASSERT_EQ(b.size(), 2u);
  EXPECT_EQ(b[0].word, (Word{{1, 1}}));
  EXPECT_EQ(b[1].word, (Word{{2, 2}}));
  EXPECT_EQ(b[1].coeff, ExactScalar(-1));
  EXPECT_TRUE(bracket({1, 2}, {3, 4}).empty());
}

TEST(Coefficients, CasimirWordCount) {
  for (int m = 1; m <= 3; ++m)
    for (int k = 1; k <= 3; ++k) {
      long want = 1;
      for (int i = 0; i < k; ++i) want *= m;
      EXPECT_EQ(static_cast<long>(casimir(m, k).size()), want);
    }
}

TEST(Gamma, ValuesAndSeries) {
  TableauPoint<ExactScalar> w{2, {ExactScalar(3, 5), ExactScalar(1), ExactScalar(0)}};
  EXPECT_EQ(gamma(w, 2, 1), ExactScalar(2));
  EXPECT_EQ(gamma_series({ExactScalar(0)}, 1, 3)[1], ExactScalar(0));
  EXPECT_TRUE(gamma_series_check(w, 2, 4));
  std::mt19937_64 rng(2);
  for (int i = 0; i < 20; ++i) {
    TableauPoint<ExactScalar> r = random_point(3, rng);
    for (int m = 1; m <= 3; ++m) EXPECT_TRUE(gamma_series_check(r, m, m + 2));
  }
}

TEST(Gamma, ActsAsScalarOnGenericTableaux) {
  std::mt19937_64 rng(4);
  TableauPoint<ExactScalar> w = random_point(3, rng);
  GenericElement t{{IntegerPattern(3), ExactScalar(1)}};
  for (int m = 1; m <= 3; ++m)
    for (int k = 1; k <= 2; ++k) {
      GenericElement got = generic_act_element(casimir(m, k), t, w);
      GenericElement want{{IntegerPattern(3), gamma(w, m, k)}};
      EXPECT_EQ(got, want) << "c_" << m << k;
    }
}

TEST(FdModule, WeylDimensions) {
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= a; ++b) {
      FdReport r = fd_module({ExactScalar(a), ExactScalar(b)});
      EXPECT_EQ(ExactScalar(r.dimension), weyl({a, b}));
      EXPECT_TRUE(r.closure_ok);
      for (int c = 0; c <= b; ++c) {
        FdReport r3 = fd_module({ExactScalar(a), ExactScalar(b), ExactScalar(c)});
        EXPECT_EQ(ExactScalar(r3.dimension), weyl({a, b, c}));
        EXPECT_TRUE(r3.closure_ok);
      }
    }
}

TEST(FdModule, TrivialModule) {
  FdReport r = fd_module({ExactScalar(0), ExactScalar(0)});
  ASSERT_EQ(r.dimension, 1);
  GenericElement v{{IntegerPattern(2), ExactScalar(1)}};
  EXPECT_TRUE(fd_act({1, 2}, v, r.basis[0]).empty());
  EXPECT_TRUE(fd_act({2, 1}, v, r.basis[0]).empty());
}
