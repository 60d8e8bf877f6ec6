#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "gtmod/scalar.hpp"

namespace gtmod {

inline constexpr int kMaxJetVars = 8;
inline constexpr int kMaxTruncation = 64;

using Exponents = std::array<std::int16_t, kMaxJetVars>;

// Number of singular parameters s_1..s_t and the truncation order K.
struct JetContext {
  int t = 0;
  int K = 6;

  JetContext() = default;
  JetContext(int t, int K);

  std::string var_name(int r) const { return "s" + std::to_string(r); }
  friend bool operator==(const JetContext&, const JetContext&) = default;
};

// Truncated Laurent series in s_1..s_t. Coefficients at exponent vectors e
// with e_r <= validity_r for every r are exact; everything outside that box is
// unknown. low_r is a guaranteed lower bound on the s_r-exponent of every term
// of the underlying series, known or not. exact_ marks jets whose terms are the
// whole function (polynomials that never lost a term to truncation).
class LaurentJet {
 public:
  struct Term {
    Exponents e;
    ExactScalar c;
  };

  explicit LaurentJet(const JetContext& ctx);

  const JetContext& context() const { return ctx_; }
  const std::vector<Term>& terms() const { return terms_; }
  const Exponents& validity() const { return validity_; }
  const Exponents& low() const { return low_; }
  bool exact() const { return exact_; }

  bool is_zero() const { return terms_.empty(); }
  bool has_negative_exponents() const;
  // Raw coefficient lookup without validity checks.
  ExactScalar coefficient(const Exponents& e) const;
  std::string str() const;

  friend LaurentJet jet_from_terms(const JetContext&, std::vector<Term>);
  friend LaurentJet jet_add(const LaurentJet&, const LaurentJet&);
  friend LaurentJet jet_mul(const LaurentJet&, const LaurentJet&);
  friend LaurentJet jet_neg(const LaurentJet&);
  friend LaurentJet jet_scale(const LaurentJet&, const ExactScalar&);
  friend LaurentJet jet_inv(const LaurentJet&);
  friend LaurentJet jet_ddiff(const LaurentJet&, int);
  friend LaurentJet jet_twist(const LaurentJet&, std::uint32_t);
  friend LaurentJet jet_mul_monomial(const LaurentJet&, const Exponents&);

 private:
  void normalize();

  JetContext ctx_;
  std::vector<Term> terms_;
  Exponents validity_{};
  Exponents low_{};
  bool exact_ = false;
};

Exponents zero_exponents();
Exponents unit_exponents(std::uint32_t mask);  // 1 in each variable of mask (bit r-1 for s_r)

LaurentJet jet_const(const ExactScalar& c, const JetContext& ctx);
LaurentJet jet_var(int r, const JetContext& ctx);
// Exact Laurent polynomial from explicit terms (all exponents must be <= K).
LaurentJet jet_from_terms(const JetContext& ctx, std::vector<LaurentJet::Term> terms);
LaurentJet jet_add(const LaurentJet& f, const LaurentJet& g);
LaurentJet jet_sub(const LaurentJet& f, const LaurentJet& g);
LaurentJet jet_mul(const LaurentJet& f, const LaurentJet& g);
LaurentJet jet_neg(const LaurentJet& f);
LaurentJet jet_scale(const LaurentJet& f, const ExactScalar& c);
LaurentJet jet_inv(const LaurentJet& f);
// Half the derivative in s_r.
LaurentJet jet_ddiff(const LaurentJet& f, int r);
ExactScalar jet_read(const LaurentJet& f, const Exponents& e);
// Substitutes s_r -> -s_r for every r in mask.
LaurentJet jet_twist(const LaurentJet& f, std::uint32_t mask);
// Multiplies by the exact monomial s^m.
LaurentJet jet_mul_monomial(const LaurentJet& f, const Exponents& m);

inline LaurentJet operator+(const LaurentJet& f, const LaurentJet& g) { return jet_add(f, g); }
inline LaurentJet operator-(const LaurentJet& f, const LaurentJet& g) { return jet_sub(f, g); }
inline LaurentJet operator*(const LaurentJet& f, const LaurentJet& g) { return jet_mul(f, g); }
inline LaurentJet operator-(const LaurentJet& f) { return jet_neg(f); }
inline LaurentJet operator*(const LaurentJet& f, const ExactScalar& c) { return jet_scale(f, c); }
inline LaurentJet operator*(const ExactScalar& c, const LaurentJet& f) { return jet_scale(f, c); }
inline LaurentJet operator+(const LaurentJet& f, const ExactScalar& c) {
  return jet_add(f, jet_const(c, f.context()));
}
inline LaurentJet operator-(const LaurentJet& f, const ExactScalar& c) {
  return jet_add(f, jet_const(-c, f.context()));
}

// Two jets agree on every coefficient both of them know exactly.
bool jets_agree(const LaurentJet& f, const LaurentJet& g);

}  // namespace gtmod
