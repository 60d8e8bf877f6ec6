#include "gtmod/polynomial.hpp"

#include <numeric>
#include <sstream>

#include "gtmod/errors.hpp"

namespace gtmod {

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
  int da = std::accumulate(a.begin(), a.end(), 0);
  int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da < db;
  return a < b;
}

Polynomial Polynomial::constant(int nvars, const ExactScalar& c) {
  Polynomial p(nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(int nvars, int r) {
  if (r < 1 || r > nvars) throw IndexOutOfRange("polynomial variable out of range");
  Polynomial p(nvars);
  Monomial m(nvars, 0);
  m[r - 1] = 1;
  p.add_term(m, ExactScalar(1));
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && std::accumulate(terms_.begin()->first.begin(), terms_.begin()->first.end(), 0) == 0);
}

int Polynomial::degree_in(int var) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
  return d;
}

ExactScalar Polynomial::eval_zero() const {
  auto it = terms_.find(Monomial(nvars_, 0));
  return it == terms_.end() ? ExactScalar() : it->second;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << it->second;
    for (int r = 0; r < nvars_; ++r)
      if (it->first[r]) os << "*s" << r + 1 << "^" << it->first[r];
  }
  return os.str();
}

void Polynomial::add_term(const Monomial& m, const ExactScalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, c);
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial out(nvars_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m(nvars_);
      for (int r = 0; r < nvars_; ++r) m[r] = ma[r] + mb[r];
      out.add_term(m, ca * cb);
    }
  return out;
}

Polynomial Polynomial::scaled(const ExactScalar& c) const {
  Polynomial out(nvars_);
  if (c.is_zero()) return out;
  out = *this;
  for (auto& [m, v] : out.terms_) v *= c;
  return out;
}

Polynomial Polynomial::derivative(int var) const {
  Polynomial out(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Monomial d = m;
    --d[var];
    out.add_term(d, c * ExactScalar(m[var]));
  }
  return out;
}

Polynomial Polynomial::twisted(unsigned mask) const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) {
    int parity = 0;
    for (int r = 0; r < nvars_; ++r)
      if (mask & (1u << r)) parity += m[r];
    if (parity & 1) c = -c;
  }
  return out;
}

std::map<int, Polynomial> Polynomial::collect(int var) const {
  std::map<int, Polynomial> out;
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    rest[var] = 0;
    auto it = out.try_emplace(m[var], Polynomial(nvars_)).first;
    it->second.add_term(rest, c);
  }
  return out;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(leading_coefficient().inverse());
}

Polynomial divide_exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw ZeroDivision();
  Polynomial q(a.nvars()), r = a;
  const Monomial& lb = b.leading_monomial();
  const ExactScalar lcb_inv = b.leading_coefficient().inverse();
  while (!r.is_zero()) {
    const Monomial lr = r.leading_monomial();
    Monomial m(a.nvars());
    for (int i = 0; i < a.nvars(); ++i) {
      m[i] = lr[i] - lb[i];
      if (m[i] < 0) throw Error("polynomial division is not exact");
    }
    Polynomial t(a.nvars());
    t.add_term(m, r.leading_coefficient() * lcb_inv);
    q = q + t;
    r = r - t * b;
  }
  return q;
}

namespace {

Polynomial content_in(const Polynomial& a, int var) {
  Polynomial g(a.nvars());
  for (const auto& [d, coeff] : a.collect(var)) {
    g = gcd(g, coeff);
    if (g.is_constant() && !g.is_zero()) break;
  }
  return g;
}

// Scale to integer coefficients with no common factor; keeps PRS coefficients small.
Polynomial numeric_primitive(const Polynomial& a) {
  if (a.is_zero()) return a;
  mpz_class den = 1, num = 0;
  for (const auto& [m, c] : a.terms()) {
    mpq_class q = c.to_mpq();
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), q.get_num_mpz_t());
  }
  return a.scaled(ExactScalar(mpq_class(den, num)));
}

Polynomial monomial_power(int nvars, int var, int d) {
  Monomial m(nvars, 0);
  m[var] = d;
  Polynomial p(nvars);
  p.add_term(m, ExactScalar(1));
  return p;
}

Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, int var) {
  const int db = b.degree_in(var);
  Polynomial lcb = b.collect(var).at(db);
  Polynomial r = a;
  while (!r.is_zero() && r.degree_in(var) >= db) {
    int dr = r.degree_in(var);
    Polynomial lcr = r.collect(var).at(dr);
    r = lcb * r - lcr * monomial_power(a.nvars(), var, dr - db) * b;
  }
  return r;
}

int first_variable(const Polynomial& a, const Polynomial& b) {
  for (int v = 0; v < a.nvars(); ++v)
    if (a.degree_in(v) > 0 || b.degree_in(v) > 0) return v;
  return -1;
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  const int nv = a.nvars();
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Polynomial::constant(nv, ExactScalar(1));
  const int v = first_variable(a, b);
  if (a.degree_in(v) == 0) return gcd(a, content_in(b, v));
  if (b.degree_in(v) == 0) return gcd(content_in(a, v), b);

  Polynomial ca = content_in(a, v), cb = content_in(b, v);
  Polynomial c = gcd(ca, cb);
  Polynomial p = numeric_primitive(divide_exact(a, ca)), q = numeric_primitive(divide_exact(b, cb));
  if (p.degree_in(v) < q.degree_in(v)) std::swap(p, q);
  while (!q.is_zero() && q.degree_in(v) > 0) {
    Polynomial r = pseudo_remainder(p, q, v);
    p = q;
    q = r.is_zero() ? r : numeric_primitive(divide_exact(r, content_in(r, v)));
  }
  // q == 0: p is the primitive gcd; q a nonzero constant in v: the primitive parts are coprime.
  Polynomial g = q.is_zero() ? divide_exact(p, content_in(p, v)) : Polynomial::constant(nv, ExactScalar(1));
  return (g * c).monic();
}

}  // namespace gtmod
