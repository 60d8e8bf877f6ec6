#include "gtmod/rational_function.hpp"

#include "gtmod/errors.hpp"

namespace gtmod {

RationalFunction::RationalFunction(int nvars) : num_(nvars), den_(Polynomial::constant(nvars, ExactScalar(1))) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw ZeroDivision();
  if (num_.is_zero()) {
    den_ = Polynomial::constant(num_.nvars(), ExactScalar(1));
    return;
  }
  Polynomial g = gcd(num_, den_);
  if (!g.is_constant()) {
    num_ = divide_exact(num_, g);
    den_ = divide_exact(den_, g);
  }
  ExactScalar lc = den_.leading_coefficient();
  if (!lc.is_one()) {
    num_ = num_.scaled(lc.inverse());
    den_ = den_.scaled(lc.inverse());
  }
}

RationalFunction RationalFunction::constant(int nvars, const ExactScalar& c) {
  return RationalFunction(Polynomial::constant(nvars, c), Polynomial::constant(nvars, ExactScalar(1)));
}

RationalFunction RationalFunction::variable(int nvars, int r) {
  return RationalFunction(Polynomial::variable(nvars, r), Polynomial::constant(nvars, ExactScalar(1)));
}

std::string RationalFunction::str() const { return "(" + num_.str() + ")/(" + den_.str() + ")"; }

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction out = *this;
  out.num_ = -num_;
  return out;
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) { return a * rf_inv(b); }

RationalFunction rf_inv(const RationalFunction& f) {
  if (f.is_zero()) throw ZeroDivision();
  return RationalFunction(f.denominator(), f.numerator());
}

RationalFunction rf_diff(const RationalFunction& f, int r) {
  if (r < 1 || r > f.nvars()) throw IndexOutOfRange("rational function variable out of range");
  const Polynomial& n = f.numerator();
  const Polynomial& d = f.denominator();
  return RationalFunction(n.derivative(r - 1) * d - n * d.derivative(r - 1), d * d);
}

ExactScalar rf_eval_zero(const RationalFunction& f) {
  ExactScalar d = f.denominator().eval_zero();
  if (d.is_zero()) throw PoleAtOrigin("rational function " + f.str() + " has a pole at the origin");
  return f.numerator().eval_zero() / d;
}

RationalFunction rf_twist(const RationalFunction& f, unsigned mask) {
  return RationalFunction(f.numerator().twisted(mask), f.denominator().twisted(mask));
}

namespace {

// Drops terms that cannot reach the constant term: degree above 1 in a
// variable still to be differentiated, or above 0 in any other.
Polynomial truncate_pending(const Polynomial& p, unsigned pending) {
  Polynomial out(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    bool keep = true;
    for (int r = 0; r < p.nvars() && keep; ++r) keep = m[r] <= ((pending >> r) & 1u ? 1 : 0);
    if (keep) out.add_term(m, c);
  }
  return out;
}

}  // namespace

ExactScalar oracle_dd(const RationalFunction& f, unsigned mask) {
  // f is reduced, so a vanishing denominator at the origin is a genuine pole.
  const Polynomial& d = f.denominator();
  const ExactScalar d0 = d.eval_zero();
  if (d0.is_zero()) throw PoleAtOrigin("rational function " + f.str() + " has a pole at the origin");
  // Track n / d^k: d/ds_r (n / d^k) = (n_r d - k n d_r) / d^(k+1).
  unsigned pending = mask & ((f.nvars() >= 32 ? ~0u : (1u << f.nvars()) - 1));
  Polynomial n = truncate_pending(f.numerator(), pending);
  int k = 1, order = 0;
  for (int r = 1; r <= f.nvars(); ++r) {
    if (!(mask & (1u << (r - 1)))) continue;
    const Polynomial dn = truncate_pending(d, pending);
    pending &= ~(1u << (r - 1));
    n = truncate_pending(n.derivative(r - 1) * dn - n.scaled(ExactScalar(k)) * dn.derivative(r - 1), pending);
    ++k;
    ++order;
  }
  return n.eval_zero() / pow(d0, k) * pow(ExactScalar(1, 2), order);
}

}  // namespace gtmod
