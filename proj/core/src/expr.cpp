#include "gtmod/expr.hpp"

#include <algorithm>

namespace gtmod {

namespace {

ExprPtr node(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

ExprPtr binary(ExprKind k, ExprPtr a, ExprPtr b) {
  Expr e;
  e.kind = k;
  e.lhs = std::move(a);
  e.rhs = std::move(b);
  return node(std::move(e));
}

}  // namespace

ExprPtr ex_const(const ExactScalar& c) {
  Expr e;
  e.value = c;
  return node(std::move(e));
}

ExprPtr ex_var(int r) {
  Expr e;
  e.kind = ExprKind::Var;
  e.a = r;
  return node(std::move(e));
}

ExprPtr ex_entry(int i, int j) {
  Expr e;
  e.kind = ExprKind::Entry;
  e.a = i;
  e.b = j;
  return node(std::move(e));
}

ExprPtr ex_add(ExprPtr a, ExprPtr b) { return binary(ExprKind::Add, std::move(a), std::move(b)); }
ExprPtr ex_sub(ExprPtr a, ExprPtr b) { return binary(ExprKind::Sub, std::move(a), std::move(b)); }
ExprPtr ex_mul(ExprPtr a, ExprPtr b) { return binary(ExprKind::Mul, std::move(a), std::move(b)); }
ExprPtr ex_neg(ExprPtr a) { return binary(ExprKind::Neg, std::move(a), nullptr); }
ExprPtr ex_inv(ExprPtr a) { return binary(ExprKind::Inv, std::move(a), nullptr); }

ExprPtr ex_e(int r, int s, const PhiElement& sigma) {
  Expr e;
  e.kind = ExprKind::ECoeff;
  e.a = r;
  e.b = s;
  e.sigma = sigma;
  return node(std::move(e));
}

ExprPtr ex_gamma(int m, int k) {
  Expr e;
  e.kind = ExprKind::Gamma;
  e.a = m;
  e.b = k;
  return node(std::move(e));
}

ExprPtr ex_pdelta(std::uint32_t mask) {
  Expr e;
  e.kind = ExprKind::PDelta;
  e.mask = mask;
  return node(std::move(e));
}

std::string to_string(const ExprPtr& e) {
  switch (e->kind) {
    case ExprKind::Const: return e->value.str();
    case ExprKind::Var: return "s" + std::to_string(e->a);
    case ExprKind::Entry: return "x" + std::to_string(e->a) + std::to_string(e->b);
    case ExprKind::Add: return "(" + to_string(e->lhs) + " + " + to_string(e->rhs) + ")";
    case ExprKind::Sub: return "(" + to_string(e->lhs) + " - " + to_string(e->rhs) + ")";
    case ExprKind::Mul: return to_string(e->lhs) + "*" + to_string(e->rhs);
    case ExprKind::Neg: return "-" + to_string(e->lhs);
    case ExprKind::Inv: return "1/" + to_string(e->lhs);
    case ExprKind::ECoeff: {
      std::string q;
      for (int m = 1; m <= kMaxRank; ++m)
        if (e->sigma.q[m] > 1) q += "(1" + std::to_string(e->sigma.q[m]) + ")@" + std::to_string(m);
      return "e" + std::to_string(e->a) + std::to_string(e->b) + "[" + q + "]";
    }
    case ExprKind::Gamma: return "gamma" + std::to_string(e->a) + std::to_string(e->b);
    case ExprKind::PDelta: return "P" + std::to_string(e->mask);
  }
  return "?";
}

int depth(const ExprPtr& e) {
  if (!e) return 0;
  return 1 + std::max(depth(e->lhs), depth(e->rhs));
}

namespace {

struct TreeBuilder {
  const SeedTableau& seed;
  std::mt19937_64& rng;

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

  ExactScalar small_rational(bool nonzero) {
    for (;;) {
      ExactScalar c(uniform(-5, 5), uniform(1, 4));
      if (!nonzero || !c.is_zero()) return c;
    }
  }

  ExprPtr leaf(int budget) {
    const int n = seed.n(), t = seed.t();
    switch (uniform(0, 4)) {
      case 0: return ex_const(small_rational(false));
      case 1:
        if (t > 0) return ex_var(uniform(1, t));
        [[fallthrough]];
      case 2: {
        int i = uniform(1, n);
        return ex_entry(i, uniform(1, i));
      }
      case 3: {
        if (budget < 2) return ex_const(small_rational(false));
        int r = uniform(1, n), s = uniform(1, n);
        auto sigmas = phi_elements(r, s);
        const PhiElement& sigma = sigmas[uniform(0, static_cast<int>(sigmas.size()) - 1)];
        return ex_mul(ex_pdelta(seed.all_pairs()), ex_e(r, s, sigma));
      }
      default: {
        int m = uniform(1, n);
        return ex_gamma(m, uniform(1, std::min(m, 3)));
      }
    }
  }

  ExprPtr build(int budget) {
    if (budget <= 1 || uniform(0, 9) < 3) return leaf(budget);
    switch (uniform(0, 4)) {
      case 0: return ex_add(build(budget - 1), build(budget - 1));
      case 1: return ex_sub(build(budget - 1), build(budget - 1));
      case 2: return ex_mul(build(budget - 1), build(budget - 1));
      case 3: return ex_neg(build(budget - 1));
      default: {
        if (budget < 4) return leaf(budget);
        // c + s_r * g has constant term c != 0 and stays smooth after inversion.
        if (seed.t() == 0) return ex_inv(ex_const(small_rational(true)));
        ExprPtr tail = ex_mul(ex_var(uniform(1, seed.t())), build(budget - 3));
        return ex_inv(ex_add(ex_const(small_rational(true)), tail));
      }
    }
  }
};

}  // namespace

ExprPtr random_smooth_expr(const SeedTableau& seed, std::mt19937_64& rng, int max_depth) {
  TreeBuilder gen{seed, rng};
  return gen.build(max_depth);
}

}  // namespace gtmod
