#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gtmod/singular_module.hpp"
#include "gtmod/tableau.hpp"

namespace gtmod {

struct VerifyConfig {
  int K = 6;
  int window = 2;
  std::uint64_t seed = 1;
  int samples = 100;  // basis vectors per seed where a suite samples
  int trees = 500;    // random expression trees for the oracle suite
  double audit_rate = 0.01;
};

struct CheckResult {
  std::string name;
  long checks = 0;
  long failures = 0;
  long skipped = 0;
  std::vector<std::string> counterexamples;

  CheckResult() = default;
  explicit CheckResult(std::string n) : name(std::move(n)) {}

  void pass() { ++checks; }
  void fail(const std::string& what);
  void expect(bool ok, const std::string& what) { ok ? pass() : fail(what); }
  bool passed() const { return failures == 0 && checks > 0; }
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  AuditStats audit;  // oracle spot checks of act / act_gamma coefficients
  double seconds = 0;
  bool passed() const;
};

std::string report_to_json(const SuiteReport& r);
std::string report_to_text(const SuiteReport& r);

struct NamedSeed {
  std::string name;
  SeedTableau seed;
};

// Rows top first as "p/q" strings.
SeedTableau make_seed(int n, const std::vector<std::vector<std::string>>& rows, const std::vector<Triple>& pairs);
// (n,t) = (3,1), (4,2), (5,2) with both pairs in row 4, (5,3).
std::vector<NamedSeed> reference_seeds();
// Extra singular seeds: one pair in row 3 of rank 4, and a rank-3 seed with
// integer differences between adjacent rows.
std::vector<NamedSeed> extra_seeds();
std::vector<NamedSeed> generic_seeds();

// Random canonical basis vectors with |z_ij| <= B; about half of the pairs are
// forced critical.
std::vector<CanonicalBasisVector> sample_vectors(const SeedTableau& seed, int count, int B, std::uint64_t rng_seed);

const std::vector<std::string>& suite_names();
// Throws std::invalid_argument for an unknown suite.
SuiteReport run_suite(const std::string& name, const VerifyConfig& config);

SuiteReport verify_jets(const VerifyConfig& config);
SuiteReport verify_identities(const VerifyConfig& config);
SuiteReport verify_bracket(const VerifyConfig& config);
SuiteReport verify_gamma(const VerifyConfig& config);
SuiteReport verify_fibers(const VerifyConfig& config);
SuiteReport verify_jordan(const VerifyConfig& config);
SuiteReport verify_verma(const VerifyConfig& config);
SuiteReport verify_oracle(const VerifyConfig& config);
SuiteReport verify_fd(const VerifyConfig& config);
SuiteReport verify_generic(const VerifyConfig& config);

}  // namespace gtmod
