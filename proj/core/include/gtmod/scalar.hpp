#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace gtmod {

// Exact rational number. Values whose numerator and denominator fit in
// 62 bits are kept inline; anything larger lives in a shared immutable mpq.
class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(std::int64_t v);  // NOLINT: integers convert implicitly
  ExactScalar(int v) : ExactScalar(static_cast<std::int64_t>(v)) {}
  ExactScalar(std::int64_t num, std::int64_t den);
  explicit ExactScalar(const mpq_class& q);

  static ExactScalar parse(std::string_view text);

  std::string str() const;  // always "p/q"
  mpq_class to_mpq() const;

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const;
  int sign() const;
  std::optional<std::int64_t> to_int64() const;

  ExactScalar inverse() const;
  ExactScalar abs() const { return sign() < 0 ? -*this : *this; }

  friend ExactScalar operator+(const ExactScalar& a, const ExactScalar& b);
  friend ExactScalar operator-(const ExactScalar& a, const ExactScalar& b);
  friend ExactScalar operator*(const ExactScalar& a, const ExactScalar& b);
  friend ExactScalar operator/(const ExactScalar& a, const ExactScalar& b);
  ExactScalar operator-() const;

  ExactScalar& operator+=(const ExactScalar& o) { return *this = *this + o; }
  ExactScalar& operator-=(const ExactScalar& o) { return *this = *this - o; }
  ExactScalar& operator*=(const ExactScalar& o) { return *this = *this * o; }
  ExactScalar& operator/=(const ExactScalar& o) { return *this = *this / o; }

  friend bool operator==(const ExactScalar& a, const ExactScalar& b);
  friend std::strong_ordering operator<=>(const ExactScalar& a, const ExactScalar& b);

  bool is_small() const { return !big_; }

 private:
  static ExactScalar from_wide(__int128 num, __int128 den);
  static ExactScalar from_mpq(mpq_class q);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const ExactScalar& q);

ExactScalar pow(const ExactScalar& base, unsigned exponent);

}  // namespace gtmod
