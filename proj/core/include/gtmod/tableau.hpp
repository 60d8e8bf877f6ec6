#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "gtmod/scalar.hpp"

namespace gtmod {

inline constexpr int kMaxRank = 7;

constexpr int cell_index(int i, int j) { return i * (i - 1) / 2 + (j - 1); }
constexpr int tableau_size(int n) { return n * (n + 1) / 2; }
constexpr int pattern_size(int n) { return n * (n - 1) / 2; }

// A designated singular pair (k, i, j): entries (k,i) and (k,j), i < j.
struct Triple {
  int k = 0;
  int i = 0;
  int j = 0;
  friend bool operator==(const Triple&, const Triple&) = default;
  friend auto operator<=>(const Triple&, const Triple&) = default;
};

// Point of T_n(V): entries (i,j), 1 <= j <= i <= n, stored row 1 first.
template <class V>
struct TableauPoint {
  int n = 0;
  std::vector<V> entries;

  const V& at(int i, int j) const { return entries[cell_index(i, j)]; }
  V& at(int i, int j) { return entries[cell_index(i, j)]; }
};

// Integer shift z in T_{n-1}(Z); the top row is implicitly zero.
class IntegerPattern {
 public:
  IntegerPattern() = default;
  explicit IntegerPattern(int n);

  int n() const { return n_; }
  int size() const { return pattern_size(n_); }
  int at(int i, int j) const { return z_[cell_index(i, j)]; }
  void set(int i, int j, int value) { z_[cell_index(i, j)] = static_cast<std::int16_t>(value); }
  int flat(int index) const { return z_[index]; }
  void set_flat(int index, int value) { z_[index] = static_cast<std::int16_t>(value); }
  bool is_zero() const { return z_ == decltype(z_){}; }
  int max_abs() const;

  IntegerPattern operator+(const IntegerPattern& o) const;
  IntegerPattern operator-(const IntegerPattern& o) const;
  IntegerPattern operator-() const;
  friend bool operator==(const IntegerPattern&, const IntegerPattern&) = default;
  friend auto operator<=>(const IntegerPattern&, const IntegerPattern&) = default;

 private:
  int n_ = 0;
  std::array<std::int16_t, pattern_size(kMaxRank)> z_{};
};

IntegerPattern delta(int n, int i, int j);
IntegerPattern epsilon(int n, int r, int s);

// sigma[i] in S_i for every row; perm[i-1][p-1] = sigma[i](p).
struct GroupElement {
  int n = 0;
  std::vector<std::vector<int>> perm;

  static GroupElement identity(int n);
  int image(int row, int p) const { return perm[row - 1][p - 1]; }
  int preimage(int row, int p) const;
  bool is_identity() const;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

GroupElement compose(const GroupElement& a, const GroupElement& b);  // a after b
GroupElement inverse(const GroupElement& g);
// Row i transposition (p q).
GroupElement transposition(int n, int row, int p, int q);

template <class V>
TableauPoint<V> group_act(const GroupElement& g, const TableauPoint<V>& w) {
  TableauPoint<V> out = w;
  for (int i = 1; i <= w.n; ++i)
    for (int p = 1; p <= i; ++p) out.at(i, p) = w.at(i, g.preimage(i, p));
  return out;
}

IntegerPattern group_act(const GroupElement& g, const IntegerPattern& z);

// Element of Phi_{kl}: for each row m in [min, max-1] the transposition (1, q[m]),
// q[m] = 1 meaning the identity. Rows outside that range are fixed.
struct PhiElement {
  std::array<std::int8_t, kMaxRank + 1> q{};  // indexed by row, 0 = untouched row
  friend bool operator==(const PhiElement&, const PhiElement&) = default;
};

std::vector<PhiElement> phi_elements(int k, int l);
GroupElement to_group(const PhiElement& s, int n);
std::vector<GroupElement> phi(int n, int k, int l);

class SeedTableau {
 public:
  SeedTableau() = default;

  int n() const { return n_; }
  int t() const { return static_cast<int>(singular_.size()); }
  const ExactScalar& at(int i, int j) const { return entries_[cell_index(i, j)]; }
  const std::vector<ExactScalar>& entries() const { return entries_; }
  const std::vector<Triple>& singular() const { return singular_; }
  const Triple& pair(int r) const { return singular_[r - 1]; }
  std::uint32_t all_pairs() const { return t() == 0 ? 0u : ((1u << t()) - 1u); }

  // 1-based pair index owning cell (i,j) and +1 for the i_r side, -1 for j_r; 0 if none.
  int pair_of(int i, int j) const { return pair_index_[cell_index(i, j)]; }
  int pair_side(int i, int j) const { return pair_side_[cell_index(i, j)]; }

  TableauPoint<ExactScalar> point() const;
  TableauPoint<ExactScalar> shifted(const IntegerPattern& z) const;

  friend SeedTableau validate_seed(int n, std::vector<ExactScalar> entries, std::vector<Triple> declared);

  friend bool operator==(const SeedTableau& a, const SeedTableau& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_ && a.singular_ == b.singular_;
  }

 private:
  int n_ = 0;
  std::vector<ExactScalar> entries_;
  std::vector<Triple> singular_;
  std::vector<int> pair_index_;
  std::vector<int> pair_side_;
};

// entries are row 1 first, n(n+1)/2 of them; throws SeedValidationError listing every violation.
SeedTableau validate_seed(int n, std::vector<ExactScalar> entries, std::vector<Triple> declared);

struct NormalizedSeed {
  SeedTableau seed;
  IntegerPattern z0;
};
NormalizedSeed normalize_seed(int n, const std::vector<ExactScalar>& raw);

// Product of the row transpositions tau_r over the pairs r in mask (bit r-1).
GroupElement tau(const SeedTableau& seed, std::uint32_t mask);
IntegerPattern tau_apply(const SeedTableau& seed, std::uint32_t mask, const IntegerPattern& z);
GroupElement tau_star(const SeedTableau& seed, std::uint32_t mask, const GroupElement& sigma, int k, int l);
PhiElement tau_star(const SeedTableau& seed, std::uint32_t mask, const PhiElement& sigma, int k, int l);

// Derivative index I as a bit set over the pairs (bit r-1 set iff I_r nonempty).
struct CanonicalBasisVector {
  std::uint32_t index = 0;
  IntegerPattern pattern;
  friend bool operator==(const CanonicalBasisVector&, const CanonicalBasisVector&) = default;
  friend auto operator<=>(const CanonicalBasisVector&, const CanonicalBasisVector&) = default;
};

struct Canonical {
  int sign = 0;  // 0 means the vector is zero
  CanonicalBasisVector vector;
};

Canonical canonicalize(const SeedTableau& seed, std::uint32_t index, const IntegerPattern& z);
bool is_canonical(const SeedTableau& seed, std::uint32_t index, const IntegerPattern& z);
// The unique canonical index for z, when all pairs with nonzero difference take
// the derivative exactly when the difference is positive.
std::uint32_t canonical_index_for(const SeedTableau& seed, const IntegerPattern& z);

struct Classification {
  bool is_generic = false;
  bool is_regular = false;
  bool is_standard = false;
  int critical_count = 0;
};

int critical_count(const SeedTableau& seed, const IntegerPattern& z);
std::uint32_t critical_mask(const SeedTableau& seed, const IntegerPattern& z);
Classification classify(const SeedTableau& seed, const IntegerPattern& z);
bool is_standard(const TableauPoint<ExactScalar>& w);
bool is_regular(const TableauPoint<ExactScalar>& w);

int popcount(std::uint32_t mask);

}  // namespace gtmod
