#pragma once

#include <map>
#include <string>
#include <vector>

#include "gtmod/scalar.hpp"

namespace gtmod {

using Monomial = std::vector<int>;

// Graded lexicographic order: total degree first, then lexicographic.
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// Sparse multivariate polynomial over Q in a fixed number of variables.
class Polynomial {
 public:
  using Terms = std::map<Monomial, ExactScalar, GrlexLess>;

  explicit Polynomial(int nvars = 0) : nvars_(nvars) {}
  static Polynomial constant(int nvars, const ExactScalar& c);
  static Polynomial variable(int nvars, int r);  // s_r, 1-based

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  int degree_in(int var) const;  // 0-based variable
  const Monomial& leading_monomial() const { return terms_.rbegin()->first; }
  const ExactScalar& leading_coefficient() const { return terms_.rbegin()->second; }
  ExactScalar eval_zero() const;
  std::string str() const;

  void add_term(const Monomial& m, const ExactScalar& c);

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial scaled(const ExactScalar& c) const;
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  Polynomial derivative(int var) const;          // 0-based
  Polynomial twisted(unsigned mask) const;       // s_r -> -s_r for bits of mask
  // Coefficients as polynomials in the remaining variables, keyed by power of var.
  std::map<int, Polynomial> collect(int var) const;
  Polynomial monic() const;

 private:
  int nvars_;
  Terms terms_;
};

// Exact quotient; throws if b does not divide a.
Polynomial divide_exact(const Polynomial& a, const Polynomial& b);
// Monic greatest common divisor (0 only if both are 0).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

}  // namespace gtmod
