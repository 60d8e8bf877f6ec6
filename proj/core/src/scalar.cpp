#include "gtmod/scalar.hpp"

#include <cctype>
#include <numeric>
#include <ostream>

#include "gtmod/errors.hpp"

namespace gtmod {

namespace {

using u128 = unsigned __int128;
using i128 = __int128;

constexpr std::int64_t kSmallLimit = std::int64_t{1} << 62;

u128 uabs(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    if ((a >> 64) == 0 && (b >> 64) == 0)
      return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
    u128 r = a % b;
    a = b;
    b = r;
  }
  return a;
}

mpz_class to_mpz(i128 v) {
  u128 m = uabs(v);
  std::uint64_t limbs[2] = {static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(m >> 64)};
  mpz_class out;
  mpz_import(out.get_mpz_t(), 2, -1, sizeof(std::uint64_t), 0, 0, limbs);
  if (v < 0) out = -out;
  return out;
}

bool fits_small(const mpz_class& z) {
  return mpz_sizeinbase(z.get_mpz_t(), 2) <= 62;
}

}  // namespace

ExactScalar::ExactScalar(std::int64_t v) {
  if (v > -kSmallLimit && v < kSmallLimit) {
    num_ = v;
  } else {
    *this = from_mpq(mpq_class(mpz_class(std::to_string(v))));
  }
}

ExactScalar::ExactScalar(std::int64_t num, std::int64_t den) {
  if (den == 0) throw ZeroDivision();
  *this = from_wide(num, den);
}

ExactScalar::ExactScalar(const mpq_class& q) { *this = from_mpq(q); }

ExactScalar ExactScalar::from_wide(i128 num, i128 den) {
  if (den == 0) throw ZeroDivision();
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) return ExactScalar();
  u128 g = gcd128(uabs(num), static_cast<u128>(den));
  if (g != 1) {
    num /= static_cast<i128>(g);
    den /= static_cast<i128>(g);
  }
  if (num > -kSmallLimit && num < kSmallLimit && den < kSmallLimit) {
    ExactScalar out;
    out.num_ = static_cast<std::int64_t>(num);
    out.den_ = static_cast<std::int64_t>(den);
    return out;
  }
  mpq_class q(to_mpz(num), to_mpz(den));
  ExactScalar out;
  out.big_ = std::make_shared<const mpq_class>(std::move(q));
  return out;
}

ExactScalar ExactScalar::from_mpq(mpq_class q) {
  q.canonicalize();
  ExactScalar out;
  if (fits_small(q.get_num()) && fits_small(q.get_den())) {
    out.num_ = q.get_num().get_si();
    out.den_ = q.get_den().get_si();
    return out;
  }
  out.big_ = std::make_shared<const mpq_class>(std::move(q));
  return out;
}

ExactScalar ExactScalar::parse(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t b = 0;
  while (b < s.size() && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  s = s.substr(b);
  if (s.empty()) throw ParseError("empty rational");
  std::size_t slash = s.find('/');
  auto valid_int = [](const std::string& part) {
    std::size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (i >= part.size()) return false;
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
    return true;
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) throw ParseError("malformed rational '" + s + "'");
  if (num[0] == '+') num = num.substr(1);
  if (den[0] == '+') den = den.substr(1);
  mpz_class n(num), d(den);
  if (d == 0) throw ParseError("zero denominator in '" + s + "'");
  return from_mpq(mpq_class(n, d));
}

std::string ExactScalar::str() const {
  if (!big_) return std::to_string(num_) + "/" + std::to_string(den_);
  return big_->get_num().get_str() + "/" + big_->get_den().get_str();
}

mpq_class ExactScalar::to_mpq() const {
  if (big_) return *big_;
  mpq_class q(mpz_class(std::to_string(num_)), mpz_class(std::to_string(den_)));
  return q;
}

bool ExactScalar::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int ExactScalar::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

std::optional<std::int64_t> ExactScalar::to_int64() const {
  if (!big_ && den_ == 1) return num_;
  return std::nullopt;
}

ExactScalar ExactScalar::inverse() const {
  if (is_zero()) throw ZeroDivision();
  if (!big_) return from_wide(den_, num_);
  return from_mpq(1 / *big_);
}

ExactScalar ExactScalar::operator-() const {
  if (!big_) {
    ExactScalar out = *this;
    out.num_ = -num_;
    return out;
  }
  return from_mpq(-*big_);
}

ExactScalar operator+(const ExactScalar& a, const ExactScalar& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == b.den_) return ExactScalar::from_wide(i128(a.num_) + b.num_, a.den_);
    return ExactScalar::from_wide(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  return ExactScalar::from_mpq(a.to_mpq() + b.to_mpq());
}

ExactScalar operator-(const ExactScalar& a, const ExactScalar& b) { return a + (-b); }

ExactScalar operator*(const ExactScalar& a, const ExactScalar& b) {
  if (!a.big_ && !b.big_) {
    if (a.num_ == 0 || b.num_ == 0) return ExactScalar();
    if (a.den_ == 1 && b.den_ == 1) return ExactScalar::from_wide(i128(a.num_) * b.num_, 1);
    std::int64_t g1 = std::gcd(a.num_, b.den_);
    std::int64_t g2 = std::gcd(b.num_, a.den_);
    i128 num = i128(a.num_ / g1) * (b.num_ / g2);
    i128 den = i128(a.den_ / g2) * (b.den_ / g1);
    return ExactScalar::from_wide(num, den);
  }
  return ExactScalar::from_mpq(a.to_mpq() * b.to_mpq());
}

ExactScalar operator/(const ExactScalar& a, const ExactScalar& b) { return a * b.inverse(); }

bool operator==(const ExactScalar& a, const ExactScalar& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // representation is unique: small and big never coincide
}

std::strong_ordering operator<=>(const ExactScalar& a, const ExactScalar& b) {
  if (!a.big_ && !b.big_) {
    i128 l = i128(a.num_) * b.den_;
    i128 r = i128(b.num_) * a.den_;
    return l <=> r;
  }
  int c = cmp(a.to_mpq(), b.to_mpq());
  return c <=> 0;
}

std::ostream& operator<<(std::ostream& os, const ExactScalar& q) { return os << q.str(); }

ExactScalar pow(const ExactScalar& base, unsigned exponent) {
  ExactScalar out(1);
  ExactScalar b = base;
  while (exponent) {
    if (exponent & 1u) out *= b;
    b *= b;
    exponent >>= 1;
  }
  return out;
}

SeedValidationError::SeedValidationError(std::vector<SeedIssue> list)
    : Error([&] {
        std::string msg = "invalid seed tableau:";
        for (const auto& i : list) msg += " [" + i.kind + ": " + i.detail + "]";
        return msg;
      }()),
      issues(std::move(list)) {}

}  // namespace gtmod
