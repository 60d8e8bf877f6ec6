#include "gtmod/coefficients.hpp"

#include "gtmod/errors.hpp"

namespace gtmod {

std::vector<ExactScalar> gamma_series(const std::vector<ExactScalar>& row, int m, int order) {
  // prod_i (u - y_i - 1)/(u - y_i) = prod_i (1 - sum_j y_i^j u^{-j-1}), y_i = v_mi + m - 1.
  const int top = order + 1;
  std::vector<ExactScalar> prod(top + 1, ExactScalar(0));
  prod[0] = 1;
  for (const auto& entry : row) {
    ExactScalar y = entry + ExactScalar(m - 1);
    std::vector<ExactScalar> factor(top + 1, ExactScalar(0));
    factor[0] = 1;
    ExactScalar yp(1);
    for (int j = 0; j + 1 <= top; ++j) {
      factor[j + 1] = -yp;
      yp *= y;
    }
    std::vector<ExactScalar> next(top + 1, ExactScalar(0));
    for (int a = 0; a <= top; ++a)
      for (int b = 0; a + b <= top; ++b) next[a + b] += prod[a] * factor[b];
    prod = std::move(next);
  }
  std::vector<ExactScalar> out;
  for (int k = 0; k <= order; ++k) out.push_back(-prod[k + 1]);
  return out;
}

bool gamma_series_check(const TableauPoint<ExactScalar>& w, int m, int order) {
  std::vector<ExactScalar> row;
  for (int i = 1; i <= m; ++i) row.push_back(w.at(m, i));
  const auto series = gamma_series(row, m, order);
  for (int k = 0; k <= order; ++k)
    if (!(series[k] == gamma(w, m, k))) return false;
  return true;
}

GlElement single(Generator g) { return {GlTerm{ExactScalar(1), Word{g}}}; }

GlElement bracket(Generator a, Generator b) {
  GlElement out;
  if (a.s == b.r) out.push_back({ExactScalar(1), Word{{a.r, b.s}}});
  if (b.s == a.r) out.push_back({ExactScalar(-1), Word{{b.r, a.s}}});
  return out;
}

GlElement casimir(int m, int k) {
  if (k < 1 || m < 1) throw IndexOutOfRange("casimir index out of range");
  GlElement out;
  std::vector<int> idx(k, 1);
  while (true) {
    Word w;
    for (int p = 0; p < k; ++p) w.push_back({idx[p], idx[(p + 1) % k]});
    out.push_back({ExactScalar(1), std::move(w)});
    int p = k - 1;
    while (p >= 0 && idx[p] == m) idx[p--] = 1;
    if (p < 0) break;
    ++idx[p];
  }
  return out;
}

void add_term(GenericElement& e, const IntegerPattern& z, const ExactScalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = e.emplace(z, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) e.erase(it);
}

GenericElement generic_act(int r, int s, const IntegerPattern& z, const TableauPoint<ExactScalar>& x) {
  const int n = x.n;
  TableauPoint<ExactScalar> w = x;
  for (int k = 0; k < pattern_size(n); ++k) w.entries[k] += ExactScalar(z.flat(k));
  GenericElement out;
  if (r == s) {
    add_term(out, z, e_diag(w, r));
    return out;
  }
  const IntegerPattern eps = epsilon(n, r, s);
  for (const auto& ph : phi_elements(r, s)) {
    GroupElement g = to_group(ph, n);
    add_term(out, z + group_act(g, eps), e_coeff(group_act(g, w), r, s));
  }
  return out;
}

GenericElement generic_act(Generator g, const GenericElement& e, const TableauPoint<ExactScalar>& x) {
  GenericElement out;
  for (const auto& [z, c] : e)
    for (const auto& [z2, c2] : generic_act(g.r, g.s, z, x)) add_term(out, z2, c * c2);
  return out;
}

GenericElement generic_act_element(const GlElement& g, const GenericElement& e, const TableauPoint<ExactScalar>& x) {
  GenericElement out;
  for (const auto& term : g) {
    GenericElement cur = e;
    for (auto it = term.word.rbegin(); it != term.word.rend(); ++it) cur = generic_act(*it, cur, x);
    for (const auto& [z, c] : cur) add_term(out, z, term.coeff * c);
  }
  return out;
}

}  // namespace gtmod
