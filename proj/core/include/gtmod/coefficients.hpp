#pragma once

#include <map>
#include <vector>

#include "gtmod/errors.hpp"
#include "gtmod/jet.hpp"
#include "gtmod/scalar.hpp"
#include "gtmod/tableau.hpp"

namespace gtmod {

inline ExactScalar make_like(const ExactScalar&, const ExactScalar& c) { return c; }
inline ExactScalar inv(const ExactScalar& x) { return x.inverse(); }
inline LaurentJet make_like(const LaurentJet& like, const ExactScalar& c) { return jet_const(c, like.context()); }
inline LaurentJet inv(const LaurentJet& x) { return jet_inv(x); }

struct Cell {
  int row = 0;
  int col = 0;
};

// Enumerates e_rs (r != s) as sign * prod numerator(a,b) / prod denominator(a,b),
// each factor being w_a - w_b.
template <class Visitor>
void visit_e_factors(int r, int s, Visitor&& vis) {
  if (r < s) {
    vis.negate();
    for (int j = 1; j <= s; ++j) vis.numerator(Cell{s - 1, 1}, Cell{s, j});
    for (int j = 2; j <= s - 1; ++j) vis.denominator(Cell{s - 1, 1}, Cell{s - 1, j});
    for (int j = r; j <= s - 2; ++j) {
      for (int t = 2; t <= j + 1; ++t) vis.numerator(Cell{j, 1}, Cell{j + 1, t});
      for (int t = 2; t <= j; ++t) vis.denominator(Cell{j, 1}, Cell{j, t});
    }
  } else {
    for (int j = 1; j <= s - 1; ++j) vis.numerator(Cell{s, 1}, Cell{s - 1, j});
    for (int j = 2; j <= s; ++j) vis.denominator(Cell{s, 1}, Cell{s, j});
    for (int j = s + 2; j <= r; ++j) {
      for (int t = 2; t <= j - 2; ++t) vis.numerator(Cell{j - 1, 1}, Cell{j - 2, t});
      for (int t = 2; t <= j - 1; ++t) vis.denominator(Cell{j - 1, 1}, Cell{j - 1, t});
    }
  }
}

template <class V>
V e_diag(const TableauPoint<V>& w, int r) {
  V acc = make_like(w.at(1, 1), ExactScalar(r - 1));
  for (int i = 1; i <= r; ++i) acc = acc + w.at(r, i);
  for (int i = 1; i < r; ++i) acc = acc - w.at(r - 1, i);
  return acc;
}

template <class V>
V e_coeff(const TableauPoint<V>& w, int r, int s) {
  if (r < 1 || s < 1 || r > w.n || s > w.n) throw IndexOutOfRange("generator index out of range");
  if (r == s) return e_diag(w, r);
  struct Acc {
    const TableauPoint<V>& w;
    V num, den;
    bool negative = false;
    void negate() { negative = !negative; }
    void numerator(Cell a, Cell b) { num = num * (w.at(a.row, a.col) - w.at(b.row, b.col)); }
    void denominator(Cell a, Cell b) { den = den * (w.at(a.row, a.col) - w.at(b.row, b.col)); }
  } acc{w, make_like(w.at(1, 1), ExactScalar(1)), make_like(w.at(1, 1), ExactScalar(1))};
  visit_e_factors(r, s, acc);
  V out = acc.num * inv(acc.den);
  return acc.negative ? -out : out;
}

// gamma_mk(w) = sum_i (w_mi + m - 1)^k prod_{j != i} (1 - 1/(w_mi - w_mj)); k = 0 allowed.
template <class V>
V gamma(const TableauPoint<V>& w, int m, int k) {
  if (m < 1 || m > w.n || k < 0) throw IndexOutOfRange("gamma index out of range");
  const ExactScalar one(1);
  V sum = make_like(w.at(1, 1), ExactScalar(0));
  for (int i = 1; i <= m; ++i) {
    V y = w.at(m, i) + ExactScalar(m - 1);
    V term = make_like(y, one);
    for (int p = 0; p < k; ++p) term = term * y;
    for (int j = 1; j <= m; ++j) {
      if (j == i) continue;
      V d = w.at(m, i) - w.at(m, j);
      term = term * (make_like(d, one) - inv(d));
    }
    sum = sum + term;
  }
  return sum;
}

// gamma_m0..gamma_m,order read off the expansion of
// prod_i (u - v_mi - m) / (u - v_mi - m + 1) = 1 - sum_k gamma_mk u^{-k-1} in u^{-1};
// finite even when row entries coincide.
std::vector<ExactScalar> gamma_series(const std::vector<ExactScalar>& row, int m, int order);
bool gamma_series_check(const TableauPoint<ExactScalar>& w, int m, int order);

struct Generator {
  int r = 0;
  int s = 0;
  friend bool operator==(const Generator&, const Generator&) = default;
  friend auto operator<=>(const Generator&, const Generator&) = default;
};

// Product of generators in written order; the rightmost acts first.
using Word = std::vector<Generator>;

struct GlTerm {
  ExactScalar coeff;
  Word word;
};

// Formal linear combination of words in U(gl(n)).
using GlElement = std::vector<GlTerm>;

GlElement single(Generator g);
// [E_kl, E_rs] = delta_lr E_ks - delta_sk E_rl
GlElement bracket(Generator a, Generator b);
// c_mk = sum over (i_1..i_k) of E_{i1 i2} E_{i2 i3} ... E_{ik i1}
GlElement casimir(int m, int k);

using GenericElement = std::map<IntegerPattern, ExactScalar>;

void add_term(GenericElement& e, const IntegerPattern& z, const ExactScalar& c);
GenericElement generic_act(int r, int s, const IntegerPattern& z, const TableauPoint<ExactScalar>& x);
GenericElement generic_act(Generator g, const GenericElement& e, const TableauPoint<ExactScalar>& x);
GenericElement generic_act_element(const GlElement& g, const GenericElement& e, const TableauPoint<ExactScalar>& x);

struct FdReport {
  int n = 0;
  std::vector<ExactScalar> lambda;
  long dimension = 0;
  std::vector<TableauPoint<ExactScalar>> basis;
  long masked_summands = 0;       // nonzero summands landing on non-standard tableaux
  long vanishing_summands = 0;    // non-standard targets whose coefficient is already zero
  long bracket_checks = 0;
  long bracket_failures = 0;
  bool closure_ok = false;
};

// Finite-dimensional module L(lambda) on standard tableaux.
FdReport fd_module(const std::vector<ExactScalar>& lambda);
// The masked action used by fd_module: the formula truncated to standard targets.
GenericElement fd_act(Generator g, const GenericElement& e, const TableauPoint<ExactScalar>& base);

}  // namespace gtmod
