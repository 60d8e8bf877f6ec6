#include "gtmod/tableau.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "gtmod/errors.hpp"
#include "gtmod/jet.hpp"

namespace gtmod {

int popcount(std::uint32_t mask) { return std::popcount(mask); }

IntegerPattern::IntegerPattern(int n) : n_(n) {
  if (n < 1 || n > kMaxRank) throw IndexOutOfRange("rank " + std::to_string(n) + " unsupported");
}

int IntegerPattern::max_abs() const {
  int m = 0;
  for (int k = 0; k < size(); ++k) m = std::max(m, std::abs(static_cast<int>(z_[k])));
  return m;
}

IntegerPattern IntegerPattern::operator+(const IntegerPattern& o) const {
  if (n_ != o.n_) throw IndexOutOfRange("pattern rank mismatch");
  IntegerPattern out = *this;
  for (int k = 0; k < size(); ++k) out.z_[k] = static_cast<std::int16_t>(z_[k] + o.z_[k]);
  return out;
}

IntegerPattern IntegerPattern::operator-() const {
  IntegerPattern out = *this;
  for (int k = 0; k < size(); ++k) out.z_[k] = static_cast<std::int16_t>(-z_[k]);
  return out;
}

IntegerPattern IntegerPattern::operator-(const IntegerPattern& o) const { return *this + (-o); }

IntegerPattern delta(int n, int i, int j) {
  if (i < 1 || i > n - 1 || j < 1 || j > i) throw IndexOutOfRange("delta index out of range");
  IntegerPattern z(n);
  z.set(i, j, 1);
  return z;
}

IntegerPattern epsilon(int n, int r, int s) {
  if (r < 1 || r > n || s < 1 || s > n) throw IndexOutOfRange("epsilon index out of range");
  IntegerPattern z(n);
  if (r == s) return z;
  int lo = std::min(r, s), hi = std::max(r, s);
  for (int m = lo; m < hi; ++m) z.set(m, 1, 1);
  return r < s ? z : -z;
}

GroupElement GroupElement::identity(int n) {
  GroupElement g;
  g.n = n;
  for (int i = 1; i <= n; ++i) {
    std::vector<int> row(i);
    std::iota(row.begin(), row.end(), 1);
    g.perm.push_back(std::move(row));
  }
  return g;
}

int GroupElement::preimage(int row, int p) const {
  const auto& pr = perm[row - 1];
  for (int q = 0; q < row; ++q)
    if (pr[q] == p) return q + 1;
  throw IndexOutOfRange("not a permutation");
}

bool GroupElement::is_identity() const { return *this == identity(n); }

GroupElement compose(const GroupElement& a, const GroupElement& b) {
  if (a.n != b.n) throw IndexOutOfRange("rank mismatch");
  GroupElement out = a;
  for (int i = 1; i <= a.n; ++i)
    for (int p = 1; p <= i; ++p) out.perm[i - 1][p - 1] = a.image(i, b.image(i, p));
  return out;
}

GroupElement inverse(const GroupElement& g) {
  GroupElement out = g;
  for (int i = 1; i <= g.n; ++i)
    for (int p = 1; p <= i; ++p) out.perm[i - 1][g.image(i, p) - 1] = p;
  return out;
}

GroupElement transposition(int n, int row, int p, int q) {
  GroupElement g = GroupElement::identity(n);
  std::swap(g.perm[row - 1][p - 1], g.perm[row - 1][q - 1]);
  return g;
}

IntegerPattern group_act(const GroupElement& g, const IntegerPattern& z) {
  if (g.n != z.n()) throw IndexOutOfRange("rank mismatch");
  IntegerPattern out(z.n());
  for (int i = 1; i < z.n(); ++i)
    for (int p = 1; p <= i; ++p) out.set(i, p, z.at(i, g.preimage(i, p)));
  return out;
}

std::vector<PhiElement> phi_elements(int k, int l) {
  int lo = std::min(k, l), hi = std::max(k, l);
  std::vector<PhiElement> out{PhiElement{}};
  for (int m = lo; m < hi; ++m) {
    std::vector<PhiElement> next;
    next.reserve(out.size() * m);
    for (const auto& s : out)
      for (int q = 1; q <= m; ++q) {
        PhiElement e = s;
        e.q[m] = static_cast<std::int8_t>(q);
        next.push_back(e);
      }
    out = std::move(next);
  }
  return out;
}

GroupElement to_group(const PhiElement& s, int n) {
  GroupElement g = GroupElement::identity(n);
  for (int m = 1; m <= std::min(n, kMaxRank); ++m)
    if (s.q[m] > 1) std::swap(g.perm[m - 1][0], g.perm[m - 1][s.q[m] - 1]);
  return g;
}

std::vector<GroupElement> phi(int n, int k, int l) {
  if (k < 1 || l < 1 || k > n || l > n) throw IndexOutOfRange("phi index out of range");
  std::vector<GroupElement> out;
  for (const auto& s : phi_elements(k, l)) out.push_back(to_group(s, n));
  return out;
}

TableauPoint<ExactScalar> SeedTableau::point() const { return TableauPoint<ExactScalar>{n_, entries_}; }

TableauPoint<ExactScalar> SeedTableau::shifted(const IntegerPattern& z) const {
  TableauPoint<ExactScalar> w = point();
  for (int k = 0; k < pattern_size(n_); ++k) w.entries[k] += ExactScalar(z.flat(k));
  return w;
}

namespace {

bool integer_gap(const ExactScalar& a, const ExactScalar& b) { return (a - b).is_integer(); }

std::string cell_str(int k, int i) { return "(" + std::to_string(k) + "," + std::to_string(i) + ")"; }

// Classes of pairwise integer-spaced positions in one row.
std::vector<std::vector<int>> integer_classes(int n, const std::vector<ExactScalar>& e, int k) {
  std::vector<std::vector<int>> classes;
  std::vector<bool> used(k + 1, false);
  for (int i = 1; i <= k; ++i) {
    if (used[i]) continue;
    std::vector<int> cls{i};
    used[i] = true;
    for (int j = i + 1; j <= k; ++j)
      if (!used[j] && integer_gap(e[cell_index(k, i)], e[cell_index(k, j)])) {
        cls.push_back(j);
        used[j] = true;
      }
    classes.push_back(std::move(cls));
  }
  (void)n;
  return classes;
}

}  // namespace

SeedTableau validate_seed(int n, std::vector<ExactScalar> entries, std::vector<Triple> declared) {
  std::vector<SeedIssue> issues;
  if (n < 1 || n > kMaxRank)
    throw SeedValidationError(std::vector<SeedIssue>{SeedIssue{"BadStructure", "rank must be between 1 and " + std::to_string(kMaxRank)}});
  if (static_cast<int>(entries.size()) != tableau_size(n))
    throw SeedValidationError(std::vector<SeedIssue>{SeedIssue{"BadStructure", "expected " + std::to_string(tableau_size(n)) + " entries"}});
  std::sort(declared.begin(), declared.end());
  if (static_cast<int>(declared.size()) > kMaxJetVars)
    issues.push_back({"BadStructure", "at most " + std::to_string(kMaxJetVars) + " singular pairs supported"});

  std::map<std::pair<int, int>, int> owner;
  for (const auto& tr : declared) {
    std::string name = "(" + std::to_string(tr.k) + "," + std::to_string(tr.i) + "," + std::to_string(tr.j) + ")";
    if (tr.k < 2 || tr.k > n - 1 || tr.i < 1 || tr.i >= tr.j || tr.j > tr.k) {
      issues.push_back({"BadStructure", "triple " + name + " must satisfy 2<=k<=n-1 and 1<=i<j<=k"});
      continue;
    }
    for (int c : {tr.i, tr.j})
      if (!owner.emplace(std::pair{tr.k, c}, 1).second)
        issues.push_back({"BadStructure", "cell " + cell_str(tr.k, c) + " belongs to two declared pairs"});
    if (!(entries[cell_index(tr.k, tr.i)] == entries[cell_index(tr.k, tr.j)]))
      issues.push_back({"UnequalPair", "declared pair " + name + " has entries " + entries[cell_index(tr.k, tr.i)].str() +
                                           " and " + entries[cell_index(tr.k, tr.j)].str()});
  }

  for (int k = 2; k <= n - 1; ++k) {
    for (const auto& cls : integer_classes(n, entries, k)) {
      if (cls.size() >= 3) {
        std::string cells;
        for (int c : cls) cells += cell_str(k, c);
        issues.push_back({"SingularTriple", "row " + std::to_string(k) + " cells " + cells + " are pairwise integer-spaced"});
      } else if (cls.size() == 2) {
        Triple tr{k, cls[0], cls[1]};
        if (!std::binary_search(declared.begin(), declared.end(), tr))
          issues.push_back({"HiddenSingularPair", "row " + std::to_string(k) + " cells " + cell_str(k, cls[0]) +
                                                      cell_str(k, cls[1]) + " differ by an integer but are not declared"});
      }
    }
  }
  for (const auto& tr : declared) {
    if (tr.k < 2 || tr.k > n - 1 || tr.i < 1 || tr.i >= tr.j || tr.j > tr.k) continue;
    if (!integer_gap(entries[cell_index(tr.k, tr.i)], entries[cell_index(tr.k, tr.j)]))
      issues.push_back({"UnequalPair", "declared pair in row " + std::to_string(tr.k) + " is not integer-spaced"});
  }
  if (!issues.empty()) throw SeedValidationError(std::move(issues));

  SeedTableau seed;
  seed.n_ = n;
  seed.entries_ = std::move(entries);
  seed.singular_ = std::move(declared);
  seed.pair_index_.assign(tableau_size(n), 0);
  seed.pair_side_.assign(tableau_size(n), 0);
  for (int r = 1; r <= seed.t(); ++r) {
    const Triple& tr = seed.singular_[r - 1];
    seed.pair_index_[cell_index(tr.k, tr.i)] = r;
    seed.pair_index_[cell_index(tr.k, tr.j)] = r;
    seed.pair_side_[cell_index(tr.k, tr.i)] = 1;
    seed.pair_side_[cell_index(tr.k, tr.j)] = -1;
  }
  return seed;
}

NormalizedSeed normalize_seed(int n, const std::vector<ExactScalar>& raw) {
  if (n < 1 || n > kMaxRank || static_cast<int>(raw.size()) != tableau_size(n))
    throw SeedValidationError(std::vector<SeedIssue>{SeedIssue{"BadStructure", "entry count does not match rank"}});
  std::vector<ExactScalar> v = raw;
  IntegerPattern z0(n);
  std::vector<Triple> declared;
  for (int k = 2; k <= n - 1; ++k) {
    for (const auto& cls : integer_classes(n, raw, k)) {
      if (cls.size() != 2) continue;  // triples are reported by validate_seed
      int i = cls[0], j = cls[1];
      ExactScalar d = raw[cell_index(k, i)] - raw[cell_index(k, j)];
      v[cell_index(k, i)] = raw[cell_index(k, j)];
      z0.set(k, i, static_cast<int>(*d.to_int64()));
      declared.push_back({k, i, j});
    }
  }
  return {validate_seed(n, std::move(v), std::move(declared)), z0};
}

GroupElement tau(const SeedTableau& seed, std::uint32_t mask) {
  GroupElement g = GroupElement::identity(seed.n());
  for (int r = 1; r <= seed.t(); ++r)
    if (mask & (1u << (r - 1))) {
      const Triple& tr = seed.pair(r);
      std::swap(g.perm[tr.k - 1][tr.i - 1], g.perm[tr.k - 1][tr.j - 1]);
    }
  return g;
}

IntegerPattern tau_apply(const SeedTableau& seed, std::uint32_t mask, const IntegerPattern& z) {
  IntegerPattern out = z;
  for (int r = 1; r <= seed.t(); ++r)
    if (mask & (1u << (r - 1))) {
      const Triple& tr = seed.pair(r);
      out.set(tr.k, tr.i, z.at(tr.k, tr.j));
      out.set(tr.k, tr.j, z.at(tr.k, tr.i));
    }
  return out;
}

GroupElement tau_star(const SeedTableau& seed, std::uint32_t mask, const GroupElement& sigma, int k, int l) {
  const int lo = std::min(k, l), hi = std::max(k, l);
  const int n = seed.n();
  GroupElement out = sigma;
  for (int r = seed.t(); r >= 1; --r) {
    if (!(mask & (1u << (r - 1)))) continue;
    const Triple& tr = seed.pair(r);
    if (tr.k < lo || tr.k > hi - 1) continue;
    const auto& row = out.perm[tr.k - 1];
    auto is_one_to = [&](int q) {
      GroupElement t1q = q == 1 ? GroupElement::identity(n) : transposition(n, tr.k, 1, q);
      return row == t1q.perm[tr.k - 1];
    };
    if (!is_one_to(tr.i) && !is_one_to(tr.j)) continue;
    GroupElement tr_g = transposition(n, tr.k, tr.i, tr.j);
    if (tr.i != 1)
      out = compose(tr_g, compose(out, tr_g));
    else
      out = compose(tr_g, out);
  }
  return out;
}

PhiElement tau_star(const SeedTableau& seed, std::uint32_t mask, const PhiElement& sigma, int k, int l) {
  const int lo = std::min(k, l), hi = std::max(k, l);
  PhiElement out = sigma;
  for (int r = 1; r <= seed.t(); ++r) {
    if (!(mask & (1u << (r - 1)))) continue;
    const Triple& tr = seed.pair(r);
    if (tr.k < lo || tr.k > hi - 1) continue;
    if (out.q[tr.k] == tr.i)
      out.q[tr.k] = static_cast<std::int8_t>(tr.j);
    else if (out.q[tr.k] == tr.j)
      out.q[tr.k] = static_cast<std::int8_t>(tr.i);
  }
  return out;
}

Canonical canonicalize(const SeedTableau& seed, std::uint32_t index, const IntegerPattern& z) {
  Canonical out{1, {index, z}};
  for (int r = 1; r <= seed.t(); ++r) {
    const Triple& tr = seed.pair(r);
    int d = z.at(tr.k, tr.i) - z.at(tr.k, tr.j);
    bool derived = index & (1u << (r - 1));
    if (derived && d == 0) return {0, {index, z}};
    if ((derived && d < 0) || (!derived && d > 0)) {
      out.vector.pattern.set(tr.k, tr.i, z.at(tr.k, tr.j));
      out.vector.pattern.set(tr.k, tr.j, z.at(tr.k, tr.i));
      if (derived) out.sign = -out.sign;
    }
  }
  return out;
}

bool is_canonical(const SeedTableau& seed, std::uint32_t index, const IntegerPattern& z) {
  for (int r = 1; r <= seed.t(); ++r) {
    const Triple& tr = seed.pair(r);
    int d = z.at(tr.k, tr.i) - z.at(tr.k, tr.j);
    bool derived = index & (1u << (r - 1));
    if (derived ? d <= 0 : d > 0) return false;
  }
  return true;
}

std::uint32_t canonical_index_for(const SeedTableau& seed, const IntegerPattern& z) {
  std::uint32_t mask = 0;
  for (int r = 1; r <= seed.t(); ++r) {
    const Triple& tr = seed.pair(r);
    if (z.at(tr.k, tr.i) > z.at(tr.k, tr.j)) mask |= 1u << (r - 1);
  }
  return mask;
}

std::uint32_t critical_mask(const SeedTableau& seed, const IntegerPattern& z) {
  std::uint32_t mask = 0;
  for (int r = 1; r <= seed.t(); ++r) {
    const Triple& tr = seed.pair(r);
    if (z.at(tr.k, tr.i) == z.at(tr.k, tr.j)) mask |= 1u << (r - 1);
  }
  return mask;
}

int critical_count(const SeedTableau& seed, const IntegerPattern& z) { return popcount(critical_mask(seed, z)); }

bool is_standard(const TableauPoint<ExactScalar>& w) {
  for (int k = 2; k <= w.n; ++k)
    for (int i = 1; i < k; ++i) {
      ExactScalar a = w.at(k, i) - w.at(k - 1, i);
      ExactScalar b = w.at(k - 1, i) - w.at(k, i + 1);
      if (!a.is_integer() || a.sign() < 0) return false;
      if (!b.is_integer() || b.sign() <= 0) return false;
    }
  return true;
}

bool is_regular(const TableauPoint<ExactScalar>& w) {
  for (int r = 2; r <= w.n; ++r)
    for (int s = 1; s <= r; ++s)
      for (int q = 1; q < r; ++q)
        if ((w.at(r, s) - w.at(r - 1, q)).is_integer()) return false;
  return true;
}

Classification classify(const SeedTableau& seed, const IntegerPattern& z) {
  Classification c;
  c.is_generic = seed.t() == 0;
  TableauPoint<ExactScalar> w = seed.shifted(z);
  c.is_regular = is_regular(w);
  c.is_standard = is_standard(w);
  c.critical_count = critical_count(seed, z);
  return c;
}

}  // namespace gtmod
