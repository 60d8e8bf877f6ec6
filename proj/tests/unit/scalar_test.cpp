#include <gtest/gtest.h>

#include <random>

#include "gtmod/errors.hpp"
#include "gtmod/scalar.hpp"

using gtmod::ExactScalar;

namespace {

mpq_class random_mpq(std::mt19937_64& rng, bool wide) {
  auto draw = [&](bool nonzero) {
    mpz_class v;
    if (wide) {
      v = mpz_class(static_cast<unsigned long>(rng()));
      v = v * mpz_class(static_cast<unsigned long>(rng() >> 2));
    } else {
      v = static_cast<long>(rng() % 2001) - 1000;
    }
    if (rng() & 1) v = -v;
    if (nonzero && v == 0) v = 1;
    return v;
  };
  mpq_class q(draw(false), abs(draw(true)));
  q.canonicalize();
  return q;
}

}  // namespace

TEST(Scalar, ParsesAndPrintsPQ) {
  EXPECT_EQ(ExactScalar::parse("3/6").str(), "1/2");
  EXPECT_EQ(ExactScalar::parse("-4").str(), "-4/1");
  EXPECT_EQ(ExactScalar::parse("0/7").str(), "0/1");
  EXPECT_THROW(ExactScalar::parse("1/0"), gtmod::Error);
  EXPECT_THROW(ExactScalar::parse("abc"), gtmod::Error);
}

TEST(Scalar, MatchesGmpOnMixedWidths) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 4000; ++i) {
    const mpq_class a = random_mpq(rng, i % 3 == 0), b = random_mpq(rng, i % 5 == 0);
    const ExactScalar x(a), y(b);
    EXPECT_EQ((x + y).to_mpq(), mpq_class(a + b));
    EXPECT_EQ((x - y).to_mpq(), mpq_class(a - b));
    EXPECT_EQ((x * y).to_mpq(), mpq_class(a * b));
    if (b != 0) {
      EXPECT_EQ((x / y).to_mpq(), mpq_class(a / b));
    }
    EXPECT_EQ(x < y, a < b);
    EXPECT_EQ(x == y, a == b);
  }
}

TEST(Scalar, OverflowPromotesAndShrinksBack) {
  const ExactScalar big(std::int64_t{1} << 61);
  const ExactScalar sq = big * big;
  EXPECT_FALSE(sq.is_small());
  const ExactScalar back = sq / big;
  EXPECT_EQ(back, big);
  EXPECT_TRUE(back.is_small());
}

TEST(Scalar, DivisionByZeroThrows) {
  EXPECT_THROW(ExactScalar(1) / ExactScalar(0), gtmod::ZeroDivision);
  EXPECT_THROW(ExactScalar(0).inverse(), gtmod::ZeroDivision);
}

TEST(Scalar, Pow) {
  EXPECT_EQ(gtmod::pow(ExactScalar(-1, 2), 5), ExactScalar(-1, 32));
  EXPECT_EQ(gtmod::pow(ExactScalar(3), 0), ExactScalar(1));
}
