#include "gtmod/coefficients.hpp"

#include <functional>

#include "gtmod/errors.hpp"

namespace gtmod {

namespace {

TableauPoint<ExactScalar> shift(const TableauPoint<ExactScalar>& base, const IntegerPattern& z) {
  TableauPoint<ExactScalar> w = base;
  for (int k = 0; k < pattern_size(base.n); ++k) w.entries[k] += ExactScalar(z.flat(k));
  return w;
}

struct MaskStats {
  long masked = 0;
  long vanishing = 0;
};

GenericElement masked_act(Generator g, const GenericElement& e, const TableauPoint<ExactScalar>& base, MaskStats* stats) {
  const int n = base.n;
  GenericElement out;
  for (const auto& [z, c] : e) {
    TableauPoint<ExactScalar> w = shift(base, z);
    if (g.r == g.s) {
      add_term(out, z, c * e_diag(w, g.r));
      continue;
    }
    const IntegerPattern eps = epsilon(n, g.r, g.s);
    for (const auto& ph : phi_elements(g.r, g.s)) {
      GroupElement s = to_group(ph, n);
      IntegerPattern target = z + group_act(s, eps);
      ExactScalar coeff = e_coeff(group_act(s, w), g.r, g.s);
      if (!is_standard(shift(base, target))) {
        if (stats) ++(coeff.is_zero() ? stats->vanishing : stats->masked);
        continue;
      }
      add_term(out, target, c * coeff);
    }
  }
  return out;
}

GenericElement masked_element(const GlElement& g, const GenericElement& e, const TableauPoint<ExactScalar>& base,
                              MaskStats* stats) {
  GenericElement out;
  for (const auto& term : g) {
    GenericElement cur = e;
    for (auto it = term.word.rbegin(); it != term.word.rend(); ++it) cur = masked_act(*it, cur, base, stats);
    for (const auto& [z, c] : cur) add_term(out, z, term.coeff * c);
  }
  return out;
}

}  // namespace

GenericElement fd_act(Generator g, const GenericElement& e, const TableauPoint<ExactScalar>& base) {
  return masked_act(g, e, base, nullptr);
}

FdReport fd_module(const std::vector<ExactScalar>& lambda) {
  const int n = static_cast<int>(lambda.size());
  if (n < 1 || n > kMaxRank) throw IndexOutOfRange("rank unsupported");
  for (int i = 0; i + 1 < n; ++i) {
    ExactScalar d = lambda[i] - lambda[i + 1];
    if (!d.is_integer() || d.sign() < 0) throw ParseError("lambda must be dominant integral");
  }
  FdReport rep;
  rep.n = n;
  rep.lambda = lambda;

  TableauPoint<ExactScalar> w{n, std::vector<ExactScalar>(tableau_size(n))};
  for (int i = 1; i <= n; ++i) w.at(n, i) = lambda[i - 1] - ExactScalar(i - 1);

  // Row k-1 entry i ranges over v_{k,i+1}+1 .. v_{k,i}.
  std::function<void(int, int)> fill = [&](int k, int i) {
    if (k == 1) {
      rep.basis.push_back(w);
      return;
    }
    if (i == k) {
      fill(k - 1, 1);
      return;
    }
    ExactScalar lo = w.at(k, i + 1) + ExactScalar(1);
    for (ExactScalar x = lo; x <= w.at(k, i); x += ExactScalar(1)) {
      w.at(k - 1, i) = x;
      fill(k, i + 1);
    }
  };
  fill(n, 1);
  rep.dimension = static_cast<long>(rep.basis.size());

  const TableauPoint<ExactScalar>& base = rep.basis.front();
  MaskStats stats;
  bool ok = true;
  for (const auto& b : rep.basis) {
    IntegerPattern z(n);
    for (int k = 0; k < pattern_size(n); ++k) z.set_flat(k, static_cast<int>(*(b.entries[k] - base.entries[k]).to_int64()));
    GenericElement e{{z, ExactScalar(1)}};
    for (int k = 1; k <= n; ++k)
      for (int l = 1; l <= n; ++l)
        for (int r = 1; r <= n; ++r)
          for (int s = 1; s <= n; ++s) {
            Generator a{k, l}, c{r, s};
            GlElement lhs{{ExactScalar(1), Word{a, c}}, {ExactScalar(-1), Word{c, a}}};
            GenericElement left = masked_element(lhs, e, base, &stats);
            GenericElement right = masked_element(bracket(a, c), e, base, nullptr);
            ++rep.bracket_checks;
            if (left != right) {
              ++rep.bracket_failures;
              ok = false;
            }
          }
  }
  rep.masked_summands = stats.masked;
  rep.vanishing_summands = stats.vanishing;
  rep.closure_ok = ok;
  return rep;
}

}  // namespace gtmod
