#pragma once

#include <string>

#include "gtmod/polynomial.hpp"

namespace gtmod {

// Reduced quotient of polynomials in s_1..s_t with a monic denominator.
class RationalFunction {
 public:
  explicit RationalFunction(int nvars = 0);
  RationalFunction(Polynomial num, Polynomial den);
  static RationalFunction constant(int nvars, const ExactScalar& c);
  static RationalFunction variable(int nvars, int r);

  int nvars() const { return num_.nvars(); }
  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  std::string str() const;

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const ExactScalar& c) {
    return a + constant(a.nvars(), c);
  }
  friend RationalFunction operator-(const RationalFunction& a, const ExactScalar& c) {
    return a + constant(a.nvars(), -c);
  }
  friend RationalFunction operator*(const RationalFunction& a, const ExactScalar& c) {
    return RationalFunction(a.num_.scaled(c), a.den_);
  }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  Polynomial num_, den_;
};

RationalFunction rf_inv(const RationalFunction& f);
RationalFunction rf_diff(const RationalFunction& f, int r);  // d/ds_r, 1-based
ExactScalar rf_eval_zero(const RationalFunction& f);           // throws PoleAtOrigin
RationalFunction rf_twist(const RationalFunction& f, unsigned mask);

inline RationalFunction make_like(const RationalFunction& like, const ExactScalar& c) {
  return RationalFunction::constant(like.nvars(), c);
}
inline RationalFunction inv(const RationalFunction& f) { return rf_inv(f); }

// D_I^v by symbolic differentiation: prod_{r in mask} (1/2) d/ds_r, then s = 0.
ExactScalar oracle_dd(const RationalFunction& f, unsigned mask);

}  // namespace gtmod
