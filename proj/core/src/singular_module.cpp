#include "gtmod/singular_module.hpp"

#include <algorithm>

#include "gtmod/errors.hpp"

namespace gtmod {

void add_term(ModuleElement& e, const CanonicalBasisVector& b, const ExactScalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = e.emplace(b, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) e.erase(it);
}

ModuleElement scaled(const ModuleElement& e, const ExactScalar& c) {
  ModuleElement out;
  if (c.is_zero()) return out;
  for (const auto& [b, v] : e) out.emplace(b, v * c);
  return out;
}

ModuleElement operator+(const ModuleElement& a, const ModuleElement& b) {
  ModuleElement out = a;
  for (const auto& [k, v] : b) add_term(out, k, v);
  return out;
}

ModuleElement operator-(const ModuleElement& a, const ModuleElement& b) { return a + scaled(b, ExactScalar(-1)); }

TableauPoint<LaurentJet> symbolize(const SeedTableau& seed, const IntegerPattern& z, const JetContext& ctx) {
  const int n = seed.n();
  if (ctx.t != seed.t()) throw ContextMismatch();
  TableauPoint<LaurentJet> w{n, {}};
  w.entries.reserve(tableau_size(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= i; ++j) {
      ExactScalar c = seed.at(i, j) + ExactScalar(i < n ? z.at(i, j) : 0);
      std::vector<LaurentJet::Term> terms{{zero_exponents(), c}};
      if (int r = seed.pair_of(i, j)) {
        Exponents e{};
        e[r - 1] = 1;
        terms.push_back({e, ExactScalar(seed.pair_side(i, j))});
      }
      w.entries.push_back(jet_from_terms(ctx, std::move(terms)));
    }
  return w;
}

TableauPoint<RationalFunction> symbolize_rf(const SeedTableau& seed, const IntegerPattern& z) {
  const int n = seed.n(), t = seed.t();
  TableauPoint<RationalFunction> w{n, {}};
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= i; ++j) {
      ExactScalar c = seed.at(i, j) + ExactScalar(i < n ? z.at(i, j) : 0);
      RationalFunction v = RationalFunction::constant(t, c);
      if (int r = seed.pair_of(i, j))
        v = v + RationalFunction::variable(t, r) * ExactScalar(seed.pair_side(i, j));
      w.entries.push_back(std::move(v));
    }
  return w;
}

LaurentJet p_delta(const JetContext& ctx, std::uint32_t mask) {
  Exponents e = unit_exponents(mask);
  return jet_from_terms(ctx, {{e, pow(ExactScalar(2), popcount(mask))}});
}

RationalFunction p_delta_rf(int t, std::uint32_t mask) {
  RationalFunction out = RationalFunction::constant(t, ExactScalar(1));
  for (int r = 1; r <= t; ++r)
    if (mask & (1u << (r - 1))) out = out * (RationalFunction::variable(t, r) * ExactScalar(2));
  return out;
}

ExactScalar dd_extract(const LaurentJet& f, std::uint32_t index) {
  const int t = f.context().t;
  if (t < kMaxJetVars && (index >> t) != 0) throw IndexOutOfRange("derivative index exceeds pair count");
  for (int r = 0; r < t; ++r) {
    int need = (index & (1u << r)) ? 1 : 0;
    if (f.validity()[r] < need)
      throw PrecisionExhausted("derivative read beyond validity in " + f.context().var_name(r + 1));
  }
  // Terms surviving the differentiations must not carry negative exponents afterwards.
  for (const auto& term : f.terms()) {
    bool survives = true, negative = false;
    for (int r = 0; r < t; ++r) {
      bool d = index & (1u << r);
      if (d && term.e[r] == 0) survives = false;
      if (term.e[r] < 0) negative = true;
    }
    if (survives && negative) throw NotSmooth("jet " + f.str() + " is not smooth at the seed");
  }
  ExactScalar c = f.coefficient(unit_exponents(index));
  if (c.is_zero()) return c;
  return c * pow(ExactScalar(1, 2), popcount(index));
}

LaurentJet divided_difference(const LaurentJet& f, std::uint32_t mask) {
  LaurentJet sum(f.context());
  sum = jet_scale(sum, ExactScalar(0));
  bool first = true;
  for (std::uint32_t sub = mask;; sub = (sub - 1) & mask) {
    LaurentJet term = jet_twist(f, sub);
    if (popcount(sub) & 1) term = jet_neg(term);
    sum = first ? term : jet_add(sum, term);
    first = false;
    if (sub == 0) break;
  }
  Exponents m{};
  for (int r = 0; r < f.context().t; ++r)
    if (mask & (1u << r)) m[r] = -1;
  return jet_mul_monomial(jet_scale(sum, pow(ExactScalar(1, 2), popcount(mask))), m);
}

namespace {

struct SymEntry {
  ExactScalar c;
  int var = 0;  // 1-based pair, 0 for constant entries
  int sign = 0;
};

// c + a1 s_v1 + a2 s_v2
struct LinearForm {
  ExactScalar c;
  int v1 = 0, a1 = 0, v2 = 0, a2 = 0;

  void add_var(int v, int a) {
    if (v == 0 || a == 0) return;
    if (v1 == v) {
      a1 += a;
    } else if (v2 == v) {
      a2 += a;
    } else if (v1 == 0 || a1 == 0) {
      v1 = v;
      a1 = a;
    } else {
      v2 = v;
      a2 = a;
    }
    if (a1 == 0 && a2 != 0) {
      std::swap(v1, v2);
      std::swap(a1, a2);
    }
  }
  int nvars() const { return (a1 != 0) + (a2 != 0); }
};

LinearForm difference(const SymEntry& a, const SymEntry& b) {
  LinearForm f{a.c - b.c};
  f.add_var(a.var, a.sign);
  f.add_var(b.var, -b.sign);
  return f;
}

LaurentJet form_jet(const LinearForm& f, const JetContext& ctx) {
  std::vector<LaurentJet::Term> terms;
  if (!f.c.is_zero()) terms.push_back({zero_exponents(), f.c});
  if (f.a1 != 0) {
    Exponents e{};
    e[f.v1 - 1] = 1;
    terms.push_back({e, ExactScalar(f.a1)});
  }
  if (f.a2 != 0) {
    Exponents e{};
    e[f.v2 - 1] = 1;
    terms.push_back({e, ExactScalar(f.a2)});
  }
  return jet_from_terms(ctx, std::move(terms));
}

int sigma_col(const PhiElement& s, int row, int p) {
  int q = row <= kMaxRank ? s.q[row] : 0;
  if (q <= 1) return p;
  if (p == 1) return q;
  if (p == q) return 1;
  return p;
}

// Collects sign * prod numerators / prod denominators, pulling out constants
// and exact monomials when requested.
struct FactorProduct {
  const std::vector<SymEntry>& entries;
  const PhiElement& sigma;
  bool cancel;
  ExactScalar scalar{1};
  std::array<int, kMaxJetVars> mono{};
  std::vector<LinearForm> nums, dens;
  bool zero = false;

  const SymEntry& at(Cell c) const { return entries[cell_index(c.row, sigma_col(sigma, c.row, c.col))]; }
  void negate() { scalar = -scalar; }
  void numerator(Cell a, Cell b) { take(difference(at(a), at(b)), true); }
  void denominator(Cell a, Cell b) { take(difference(at(a), at(b)), false); }

  void take(const LinearForm& f, bool num) {
    if (f.nvars() == 0) {
      if (num) {
        if (f.c.is_zero()) zero = true;
        scalar *= f.c;
      } else {
        scalar /= f.c;  // throws ZeroDivision on coincident constant entries
      }
      return;
    }
    if (cancel && f.c.is_zero() && f.nvars() == 1) {
      if (num) {
        scalar *= ExactScalar(f.a1);
        ++mono[f.v1 - 1];
      } else {
        scalar /= ExactScalar(f.a1);
        --mono[f.v1 - 1];
      }
      return;
    }
    (num ? nums : dens).push_back(f);
  }
};

// Dense power series truncated to the box e_r <= deg_r, enough for every
// coefficient a derivative read can touch once the monomial part is split off.
class BoxSeries {
 public:
  BoxSeries(int t, const std::array<int, kMaxJetVars>& deg, const ExactScalar& c) : t_(t) {
    int size = 1;
    for (int r = 0; r < t; ++r) {
      dim_[r] = deg[r] + 1;
      stride_[r] = size;
      size *= dim_[r];
    }
    coeffs_.assign(size, ExactScalar(0));
    coeffs_[0] = c;
  }

  void multiply(const LinearForm& f) {
    for (int idx = static_cast<int>(coeffs_.size()) - 1; idx >= 0; --idx) {
      ExactScalar v = coeffs_[idx] * f.c;
      if (f.a1 != 0 && digit(idx, f.v1 - 1) > 0) v += coeffs_[idx - stride_[f.v1 - 1]] * ExactScalar(f.a1);
      if (f.a2 != 0 && digit(idx, f.v2 - 1) > 0) v += coeffs_[idx - stride_[f.v2 - 1]] * ExactScalar(f.a2);
      coeffs_[idx] = std::move(v);
    }
  }

  void divide(const LinearForm& f) {
    if (f.c.is_zero()) throw NotInvertible("denominator vanishes at the seed");
    const ExactScalar inv = f.c.inverse();
    for (int idx = 0; idx < static_cast<int>(coeffs_.size()); ++idx) {
      ExactScalar v = coeffs_[idx];
      if (f.a1 != 0 && digit(idx, f.v1 - 1) > 0) v -= coeffs_[idx - stride_[f.v1 - 1]] * ExactScalar(f.a1);
      if (f.a2 != 0 && digit(idx, f.v2 - 1) > 0) v -= coeffs_[idx - stride_[f.v2 - 1]] * ExactScalar(f.a2);
      coeffs_[idx] = v * inv;
    }
  }

  // Coefficient of s^e; exponents outside the box read as zero only when negative.
  ExactScalar at(const std::array<int, kMaxJetVars>& e) const {
    int idx = 0;
    for (int r = 0; r < t_; ++r) {
      if (e[r] < 0) return ExactScalar(0);
      idx += e[r] * stride_[r];
    }
    return coeffs_[idx];
  }

  // Some nonzero coefficient has e_r < below[r] for a variable with below[r] > 0.
  bool has_low_term(const std::array<int, kMaxJetVars>& below) const {
    for (int idx = 0; idx < static_cast<int>(coeffs_.size()); ++idx) {
      if (coeffs_[idx].is_zero()) continue;
      for (int r = 0; r < t_; ++r)
        if (digit(idx, r) < below[r]) return true;
    }
    return false;
  }

 private:
  int digit(int idx, int r) const { return (idx / stride_[r]) % dim_[r]; }

  int t_;
  std::array<int, kMaxJetVars> dim_{}, stride_{};
  std::vector<ExactScalar> coeffs_;
};

}  // namespace

SingularModule::SingularModule(SeedTableau seed, ActionOptions options)
    : seed_(std::move(seed)), options_(options), audit_rng_(options.audit_seed) {
  const int n = seed_.n();
  phi_.resize(n * n);
  for (int r = 1; r <= n; ++r)
    for (int s = 1; s <= n; ++s) phi_[(r - 1) * n + (s - 1)] = phi_elements(r, s);
}

ModuleElement SingularModule::act(Generator g, const CanonicalBasisVector& b) const {
  if (!is_canonical(seed_, b.index, b.pattern) || canonicalize(seed_, b.index, b.pattern).sign == 0)
    throw Error("act requires a canonical nonzero basis vector");
  if (options_.memoize) {
    auto it = cache_.find({g, b});
    if (it != cache_.end()) {
      ++stats_.cache_hits;
      return it->second;
    }
  }
  ModuleElement out = act_raw(g, b.index, b.pattern);
  if (options_.memoize) cache_.emplace(std::pair{g, b}, out);
  return out;
}

ModuleElement SingularModule::act_raw(Generator g, std::uint32_t index, const IntegerPattern& z) const {
  const int n = seed_.n();
  if (g.r < 1 || g.s < 1 || g.r > n || g.s > n) throw IndexOutOfRange("generator index out of range");
  if (z.n() != n) throw IndexOutOfRange("pattern rank mismatch");
  try {
    return act_impl(g, index, z, options_.K);
  } catch (const PrecisionExhausted&) {
    ++stats_.retries;
    return act_impl(g, index, z, std::min(2 * options_.K, kMaxTruncation));
  }
}

ModuleElement SingularModule::act_impl(Generator g, std::uint32_t index, const IntegerPattern& z, int K) const {
  const int n = seed_.n(), t = seed_.t();
  const JetContext ctx(t, K);
  const std::uint32_t all = seed_.all_pairs();
  const std::uint32_t pmask = all & ~index;

  std::vector<SymEntry> entries(tableau_size(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= i; ++j) {
      SymEntry& e = entries[cell_index(i, j)];
      e.c = seed_.at(i, j) + ExactScalar(i < n ? z.at(i, j) : 0);
      e.var = seed_.pair_of(i, j);
      e.sign = seed_.pair_side(i, j);
    }

  const auto& sigmas = phi_[(g.r - 1) * n + (g.s - 1)];
  ModuleElement out;
  for (const auto& sigma : sigmas) {
    ++stats_.sigma_terms;
    FactorProduct fp{entries, sigma, options_.cancel_monomials, ExactScalar(1), {}, {}, {}, false};
    for (int r = 1; r <= t; ++r)
      if (pmask & (1u << (r - 1))) fp.take(LinearForm{ExactScalar(0), r, 2}, true);
    if (g.r == g.s) {
      LinearForm sum{ExactScalar(g.r - 1)};
      for (int i = 1; i <= g.r; ++i) {
        const SymEntry& e = entries[cell_index(g.r, i)];
        sum.c += e.c;
        sum.add_var(e.var, e.sign);
      }
      for (int i = 1; i < g.r; ++i) {
        const SymEntry& e = entries[cell_index(g.r - 1, i)];
        sum.c -= e.c;
        sum.add_var(e.var, -e.sign);
      }
      fp.take(sum, true);
    } else {
      visit_e_factors(g.r, g.s, fp);
    }
    if (fp.zero) continue;
    bool negligible = false;
    for (int r = 0; r < t; ++r)
      if (fp.mono[r] >= 2) negligible = true;  // every read is at exponent <= 1
    if (negligible) continue;

    std::vector<ExactScalar> values(all + 1);
    if (options_.cancel_monomials) {
      std::array<int, kMaxJetVars> deg{}, below{};
      for (int r = 0; r < t; ++r) {
        deg[r] = 1 - fp.mono[r];
        below[r] = -fp.mono[r];
      }
      BoxSeries box(t, deg, fp.scalar);
      for (const auto& form : fp.nums) box.multiply(form);
      for (const auto& form : fp.dens) box.divide(form);
      if (box.has_low_term(below)) throw NotSmooth("pole survives at the seed for E_" + std::to_string(g.r) + std::to_string(g.s));
      for (std::uint32_t D = 0; D <= all; ++D) {
        std::array<int, kMaxJetVars> e{};
        for (int r = 0; r < t; ++r) e[r] = ((D >> r) & 1u) - fp.mono[r];
        ExactScalar c = box.at(e);
        values[D] = c.is_zero() ? c : c * pow(ExactScalar(1, 2), popcount(D));
      }
    } else {
      LaurentJet f = jet_const(fp.scalar, ctx);
      for (const auto& form : fp.nums) f = jet_mul(f, form_jet(form, ctx));
      for (const auto& form : fp.dens) f = jet_mul(f, jet_inv(form_jet(form, ctx)));
      for (std::uint32_t D = 0; D <= all; ++D) values[D] = dd_extract(f, D);
    }

    IntegerPattern target = z;
    if (g.r != g.s) {
      const int lo = std::min(g.r, g.s), hi = std::max(g.r, g.s);
      const int step = g.r < g.s ? 1 : -1;
      for (int row = lo; row < hi; ++row) {
        int col = sigma.q[row] <= 1 ? 1 : sigma.q[row];
        target.set(row, col, target.at(row, col) + step);
      }
    }
    for (std::uint32_t J = 0; J <= all; ++J) {
      const ExactScalar& c = values[all & ~J];
      if (c.is_zero()) continue;
      Canonical canon = canonicalize(seed_, J, target);
      if (canon.sign == 0) continue;
      add_term(out, canon.vector, canon.sign > 0 ? c : -c);
    }
    if (options_.audit_rate > 0 &&
        std::uniform_real_distribution<double>(0.0, 1.0)(audit_rng_) < options_.audit_rate)
      audit_sigma(g, sigma, pmask, z, values);
  }
  return out;
}

void SingularModule::audit_sigma(Generator g, const PhiElement& sigma, std::uint32_t pmask, const IntegerPattern& z,
                                 const std::vector<ExactScalar>& values) const {
  const int t = seed_.t();
  TableauPoint<RationalFunction> w = group_act(to_group(sigma, seed_.n()), symbolize_rf(seed_, z));
  RationalFunction rf = p_delta_rf(t, pmask) * e_coeff(w, g.r, g.s);
  const std::uint32_t all = seed_.all_pairs();
  for (std::uint32_t D = 0; D <= all; ++D) {
    ++audit_.sampled;
    ExactScalar want = oracle_dd(rf, D);
    const ExactScalar& got = values[D];
    if (!(want == got)) {
      ++audit_.mismatches;
      if (audit_.failures.size() < 20)
        audit_.failures.push_back("E_" + std::to_string(g.r) + std::to_string(g.s) + " derivative mask " +
                                  std::to_string(D) + ": jet " + got.str() + " oracle " + want.str());
    }
  }
}

ModuleElement SingularModule::act(Generator g, const ModuleElement& e) const {
  ModuleElement out;
  for (const auto& [b, c] : e)
    for (const auto& [b2, c2] : act(g, b)) add_term(out, b2, c * c2);
  return out;
}

ModuleElement SingularModule::act_element(const GlElement& g, const ModuleElement& e) const {
  ModuleElement out;
  for (const auto& term : g) {
    ModuleElement cur = e;
    for (auto it = term.word.rbegin(); it != term.word.rend() && !cur.empty(); ++it) cur = act(*it, cur);
    for (const auto& [b, c] : cur) add_term(out, b, term.coeff * c);
  }
  return out;
}

ModuleElement SingularModule::act_gamma(int m, int k, const CanonicalBasisVector& b) const {
  if (k < 1 || m < 1 || k > m || m > seed_.n()) throw IndexOutOfRange("gamma index out of range");
  if (!is_canonical(seed_, b.index, b.pattern)) throw Error("act_gamma requires a canonical basis vector");
  try {
    return act_gamma_impl(m, k, b, options_.K);
  } catch (const PrecisionExhausted&) {
    ++stats_.retries;
    return act_gamma_impl(m, k, b, std::min(2 * options_.K, kMaxTruncation));
  }
}

ModuleElement SingularModule::act_gamma_impl(int m, int k, const CanonicalBasisVector& b, int K) const {
  const JetContext ctx(seed_.t(), K);
  LaurentJet gm = gamma(symbolize(seed_, b.pattern, ctx), m, k);
  const bool audit = options_.audit_rate > 0 &&
                     std::uniform_real_distribution<double>(0.0, 1.0)(audit_rng_) < options_.audit_rate;
  RationalFunction oracle;
  if (audit) oracle = gamma(symbolize_rf(seed_, b.pattern), m, k);
  ModuleElement out;
  for (std::uint32_t J = b.index;; J = (J - 1) & b.index) {
    ExactScalar c = dd_extract(gm, J);
    if (audit) {
      ++audit_.sampled;
      ExactScalar want = oracle_dd(oracle, J);
      if (!(want == c)) {
        ++audit_.mismatches;
        if (audit_.failures.size() < 20)
          audit_.failures.push_back("gamma_" + std::to_string(m) + std::to_string(k) + " derivative mask " +
                                    std::to_string(J) + ": jet " + c.str() + " oracle " + want.str());
      }
    }
    if (!c.is_zero()) {
      Canonical canon = canonicalize(seed_, b.index & ~J, b.pattern);
      if (canon.sign != 0) add_term(out, canon.vector, canon.sign > 0 ? c : -c);
    }
    if (J == 0) break;
  }
  return out;
}

ModuleElement SingularModule::act_gamma(int m, int k, const ModuleElement& e) const {
  ModuleElement out;
  for (const auto& [b, c] : e)
    for (const auto& [b2, c2] : act_gamma(m, k, b)) add_term(out, b2, c * c2);
  return out;
}

ExactScalar SingularModule::gamma_value(int m, int k, const IntegerPattern& z) const {
  auto read = [&](int K) { return dd_extract(gamma(symbolize(seed_, z, JetContext(seed_.t(), K)), m, k), 0); };
  try {
    return read(options_.K);
  } catch (const PrecisionExhausted&) {
    ++stats_.retries;
    return read(std::min(2 * options_.K, kMaxTruncation));
  }
}

}  // namespace gtmod
