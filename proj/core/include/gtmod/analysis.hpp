#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gtmod/singular_module.hpp"
#include "gtmod/tableau.hpp"

namespace gtmod {

// gamma_m1..gamma_mm of a row through the generating function.
std::vector<ExactScalar> gamma_row_values(const std::vector<ExactScalar>& row, int m);

// Ordered tuple (gamma_mk(v+z)) for 1 <= k <= m <= n.
using Fingerprint = std::vector<ExactScalar>;

// Caches gamma values per row; rows with equal gamma values share an id, so
// two patterns have equal fingerprints iff their row ids agree.
class FingerprintTable {
 public:
  explicit FingerprintTable(const SeedTableau& seed);
  Fingerprint fingerprint(const IntegerPattern& z);
  std::vector<int> row_ids(const IntegerPattern& z);
  int row_id(int m, const std::vector<int>& zrow);
  const std::vector<ExactScalar>& row_values(int m, int id) const { return values_[m - 1][id]; }

 private:
  const SeedTableau& seed_;
  std::vector<std::map<std::vector<int>, int>> by_pattern_;
  std::vector<std::map<std::vector<ExactScalar>, int>> by_value_;
  std::vector<std::vector<std::vector<ExactScalar>>> values_;
};

// Calls f(z) for every z with all |z_ij| <= B, last entry varying fastest.
template <class F>
void for_each_pattern(int n, int B, F&& f) {
  if (B < 0) return;
  IntegerPattern z(n);
  const int size = pattern_size(n);
  for (int i = 0; i < size; ++i) z.set_flat(i, -B);
  for (;;) {
    f(static_cast<const IntegerPattern&>(z));
    int i = size - 1;
    while (i >= 0 && z.flat(i) == B) z.set_flat(i--, -B);
    if (i < 0) return;
    z.set_flat(i, z.flat(i) + 1);
  }
}

CanonicalBasisVector basis_vector_for(const SeedTableau& seed, const IntegerPattern& z);
std::vector<CanonicalBasisVector> window_vectors(const SeedTableau& seed, int B);
// Distinct canonical vectors of the twist family {tau_Delta(z)}.
std::vector<CanonicalBasisVector> fiber_vectors(const SeedTableau& seed, const IntegerPattern& z);

struct FiberCount {
  long count = 0;
  long expected = 0;
};
FiberCount fiber_multiplicity(const SeedTableau& seed, const IntegerPattern& z);

struct FiberAuditReport {
  int n = 0, t = 0, B = 0;
  long patterns = 0;
  long fibers = 0;
  long mismatches = 0;
  std::vector<long> patterns_by_critical;  // indexed by k
  std::vector<std::string> failures;
  bool ok = false;
};
// Groups every pattern of the window by fingerprint and checks each group has 2^{t-k} members.
FiberAuditReport fiber_dimension_audit(const SeedTableau& seed, int B);

struct CharacterRow {
  Fingerprint fingerprint;
  long dimension = 0;
  long expected = 0;
  int critical = 0;
};
std::vector<CharacterRow> character_window(const SeedTableau& seed, int B);

// Size of the largest Jordan cell of c_mk on the fiber of z.
int geometric_multiplicity(const SingularModule& module, const IntegerPattern& z, int m, int k);
// 1 + the number of pairs in row m that are not critical in z.
int expected_geometric_multiplicity(const SeedTableau& seed, const IntegerPattern& z, int m);

inline constexpr int kIsoCheckMaxRank = 5;
bool iso_check(const SeedTableau& a, const SeedTableau& b);

struct ReachEdge {
  int from = 0, to = 0;
  Generator g;
};

struct ReachGraph {
  std::vector<CanonicalBasisVector> nodes;
  std::vector<ReachEdge> edges;
  int source = 0;
  std::vector<bool> reached;
  std::vector<int> component;
  int components = 0;
  int largest_component = 0;
  std::string caveat;
};

// Nodes are the window vectors; with full == false only vectors reached from
// the source are expanded.
ReachGraph reachability(const SingularModule& module, const CanonicalBasisVector& source, int B, bool full = true);
std::string graph_to_dot(const ReachGraph& g);
std::string graph_to_json(const ReachGraph& g);

SeedTableau verma_seed(int n, const std::vector<ExactScalar>& a);

struct VermaReport {
  int n = 0;
  std::vector<ExactScalar> a;
  bool highest_weight = false;
  std::vector<ExactScalar> weight, expected_weight;
  IntegerPattern fiber_pattern;
  long fiber_size = 0;
  long fiber_reached = 0;
  long expected_degree = 0;
  std::vector<int> geometric;  // c_k2 on the fiber, k = 2..n-1
  long explored_nodes = 0;
  // Exact dimensions inside the submodule generated by D_0 T(v): on the
  // distinguished fiber, and the largest over weights lambda - sum c_i alpha_i, c_i <= depth.
  long fiber_rank = 0;
  long gt_degree = 0;
  std::vector<int> gt_degree_weight;
  int depth = 0;
  bool ok = false;
};
VermaReport verma_demo(int n, const std::vector<ExactScalar>& a, const ActionOptions& options = {}, int depth = 3);

// Weight spaces of U(gl(n)) b for a highest weight vector b, built from simple
// lowerings; keyed by the multiplicities c_i of the simple roots subtracted.
std::map<std::vector<int>, std::vector<ModuleElement>> lowering_weight_spaces(const SingularModule& module,
                                                                              const CanonicalBasisVector& top, int depth);
// Dimension of the span of the given elements.
long span_dimension(std::vector<ModuleElement> elems);

struct BoundReport {
  long checks = 0;
  long violations = 0;
  std::vector<std::string> failures;
  bool ok() const { return violations == 0; }
};
// Fiber intersections of the vectors reached from source never exceed 2^{t-k}.
BoundReport fiber_bound_audit(const SingularModule& module, const CanonicalBasisVector& source, int B);
// Geometric multiplicities of every c_mk on every fiber of the window are at most
// 1 + (pairs in row m); with one pair per row this is the bound 2.
BoundReport jordan_bound_audit(const SingularModule& module, int B);

std::string fingerprint_str(const Fingerprint& f);

}  // namespace gtmod
