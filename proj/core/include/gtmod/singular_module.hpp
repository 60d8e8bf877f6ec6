#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "gtmod/coefficients.hpp"
#include "gtmod/jet.hpp"
#include "gtmod/rational_function.hpp"
#include "gtmod/tableau.hpp"

namespace gtmod {

using ModuleElement = std::map<CanonicalBasisVector, ExactScalar>;

void add_term(ModuleElement& e, const CanonicalBasisVector& b, const ExactScalar& c);
ModuleElement scaled(const ModuleElement& e, const ExactScalar& c);
ModuleElement operator+(const ModuleElement& a, const ModuleElement& b);
ModuleElement operator-(const ModuleElement& a, const ModuleElement& b);

// x + z on the line x_{k_r i_r} = a_r + s_r, x_{k_r j_r} = a_r - s_r.
TableauPoint<LaurentJet> symbolize(const SeedTableau& seed, const IntegerPattern& z, const JetContext& ctx);
TableauPoint<RationalFunction> symbolize_rf(const SeedTableau& seed, const IntegerPattern& z);

// P_Delta = prod_{r in Delta} 2 s_r
LaurentJet p_delta(const JetContext& ctx, std::uint32_t mask);
RationalFunction p_delta_rf(int t, std::uint32_t mask);

// D_I^v(f): (1/2)^|I| times the coefficient of prod_{r in I} s_r, for smooth f.
ExactScalar dd_extract(const LaurentJet& f, std::uint32_t index);
// f_Delta = P_Delta^{-1} sum_{D subset Delta} (-1)^|D| f^{tau_D}
LaurentJet divided_difference(const LaurentJet& f, std::uint32_t mask);

struct ActionOptions {
  int K = 6;
  // Cancel exact monomial factors (the P factors against 2 s_r denominators)
  // and expand the rest only as far as derivative reads reach; off means the
  // literal evaluation with order-K jets.
  bool cancel_monomials = true;
  bool memoize = false;
  // Fraction of (sigma, J) coefficients recomputed with the rational-function oracle.
  double audit_rate = 0.0;
  std::uint64_t audit_seed = 1;
};

struct AuditStats {
  long sampled = 0;
  long mismatches = 0;
  std::vector<std::string> failures;
};

struct ActionStats {
  long sigma_terms = 0;
  long retries = 0;
  long cache_hits = 0;
};

class SingularModule {
 public:
  explicit SingularModule(SeedTableau seed, ActionOptions options = {});

  const SeedTableau& seed() const { return seed_; }
  const ActionOptions& options() const { return options_; }
  int n() const { return seed_.n(); }
  int t() const { return seed_.t(); }

  // g . D_I T(v+z) for a canonical nonzero basis vector.
  ModuleElement act(Generator g, const CanonicalBasisVector& b) const;
  // The defining formula evaluated on (I, z) as given, without first
  // canonicalizing; pairs in I must not be critical in z.
  ModuleElement act_raw(Generator g, std::uint32_t index, const IntegerPattern& z) const;
  ModuleElement act(Generator g, const ModuleElement& e) const;
  ModuleElement act_element(const GlElement& g, const ModuleElement& e) const;

  // c_mk . D_I T(v+z) = sum_{J subset I} D_J^v(gamma_mk(x+z)) D_{I\J} T(v+z)
  ModuleElement act_gamma(int m, int k, const CanonicalBasisVector& b) const;
  ModuleElement act_gamma(int m, int k, const ModuleElement& e) const;
  // gamma_mk(v+z) read at s = 0.
  ExactScalar gamma_value(int m, int k, const IntegerPattern& z) const;

  const AuditStats& audit() const { return audit_; }
  const ActionStats& stats() const { return stats_; }

 private:
  ModuleElement act_impl(Generator g, std::uint32_t index, const IntegerPattern& z, int K) const;
  ModuleElement act_gamma_impl(int m, int k, const CanonicalBasisVector& b, int K) const;
  void audit_sigma(Generator g, const PhiElement& sigma, std::uint32_t pmask, const IntegerPattern& z,
                   const std::vector<ExactScalar>& values) const;

  SeedTableau seed_;
  ActionOptions options_;
  std::vector<std::vector<PhiElement>> phi_;  // indexed (r-1)*n + (s-1)
  mutable std::map<std::pair<Generator, CanonicalBasisVector>, ModuleElement> cache_;
  mutable AuditStats audit_;
  mutable ActionStats stats_;
  mutable std::mt19937_64 audit_rng_;
};

}  // namespace gtmod
