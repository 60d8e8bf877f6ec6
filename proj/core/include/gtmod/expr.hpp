#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>

#include "gtmod/coefficients.hpp"
#include "gtmod/jet.hpp"
#include "gtmod/rational_function.hpp"
#include "gtmod/tableau.hpp"

namespace gtmod {

enum class ExprKind { Const, Var, Entry, Add, Sub, Mul, Neg, Inv, ECoeff, Gamma, PDelta };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// Expression over a tableau point: entries, the singular parameters s_r,
// e-coefficients at sigma(point), gamma_mk and the vanishing products P_Delta.
struct Expr {
  ExprKind kind = ExprKind::Const;
  ExactScalar value;
  int a = 0, b = 0;  // Var: r; Entry: (i,j); ECoeff: (r,s); Gamma: (m,k)
  PhiElement sigma;
  std::uint32_t mask = 0;
  ExprPtr lhs, rhs;
};

ExprPtr ex_const(const ExactScalar& c);
ExprPtr ex_var(int r);
ExprPtr ex_entry(int i, int j);
ExprPtr ex_add(ExprPtr a, ExprPtr b);
ExprPtr ex_sub(ExprPtr a, ExprPtr b);
ExprPtr ex_mul(ExprPtr a, ExprPtr b);
ExprPtr ex_neg(ExprPtr a);
ExprPtr ex_inv(ExprPtr a);
ExprPtr ex_e(int r, int s, const PhiElement& sigma);
ExprPtr ex_gamma(int m, int k);
ExprPtr ex_pdelta(std::uint32_t mask);

std::string to_string(const ExprPtr& e);
int depth(const ExprPtr& e);

inline LaurentJet variable_like(const LaurentJet& like, int r) { return jet_var(r, like.context()); }
inline RationalFunction variable_like(const RationalFunction& like, int r) {
  return RationalFunction::variable(like.nvars(), r);
}

template <class V>
V evaluate(const Expr& e, const SeedTableau& seed, const TableauPoint<V>& w) {
  const V& like = w.at(1, 1);
  switch (e.kind) {
    case ExprKind::Const: return make_like(like, e.value);
    case ExprKind::Var: return variable_like(like, e.a);
    case ExprKind::Entry: return w.at(e.a, e.b);
    case ExprKind::Add: return evaluate(*e.lhs, seed, w) + evaluate(*e.rhs, seed, w);
    case ExprKind::Sub: return evaluate(*e.lhs, seed, w) - evaluate(*e.rhs, seed, w);
    case ExprKind::Mul: return evaluate(*e.lhs, seed, w) * evaluate(*e.rhs, seed, w);
    case ExprKind::Neg: return -evaluate(*e.lhs, seed, w);
    case ExprKind::Inv: return inv(evaluate(*e.lhs, seed, w));
    case ExprKind::ECoeff: return e_coeff(group_act(to_group(e.sigma, w.n), w), e.a, e.b);
    case ExprKind::Gamma: return gamma(w, e.a, e.b);
    case ExprKind::PDelta: {
      V acc = make_like(like, ExactScalar(1));
      for (int r = 1; r <= seed.t(); ++r)
        if (e.mask & (1u << (r - 1))) {
          const Triple& p = seed.pair(r);
          acc = acc * (w.at(p.k, p.i) - w.at(p.k, p.j));
        }
      return acc;
    }
  }
  throw Error("unknown expression kind");
}

// Random expression of depth <= max_depth that is smooth on the symbolized
// line: e-coefficients only appear multiplied by P_Sigma, and inverses only
// of expressions with a nonzero constant term.
ExprPtr random_smooth_expr(const SeedTableau& seed, std::mt19937_64& rng, int max_depth);

}  // namespace gtmod
