#include "gtmod/analysis.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/strong_components.hpp>

#include "gtmod/errors.hpp"
#include "gtmod/io.hpp"
#include "json.hpp"

namespace gtmod {

std::vector<ExactScalar> gamma_row_values(const std::vector<ExactScalar>& row, int m) {
  auto series = gamma_series(row, m, m);
  return {series.begin() + 1, series.end()};
}

FingerprintTable::FingerprintTable(const SeedTableau& seed)
    : seed_(seed), by_pattern_(seed.n()), by_value_(seed.n()), values_(seed.n()) {}

int FingerprintTable::row_id(int m, const std::vector<int>& zrow) {
  auto& cache = by_pattern_[m - 1];
  auto it = cache.find(zrow);
  if (it != cache.end()) return it->second;
  std::vector<ExactScalar> row;
  for (int j = 1; j <= m; ++j) row.push_back(seed_.at(m, j) + ExactScalar(zrow[j - 1]));
  std::vector<ExactScalar> vals = gamma_row_values(row, m);
  auto& interned = by_value_[m - 1];
  auto [vit, fresh] = interned.emplace(vals, static_cast<int>(values_[m - 1].size()));
  if (fresh) values_[m - 1].push_back(std::move(vals));
  cache.emplace(zrow, vit->second);
  return vit->second;
}

std::vector<int> FingerprintTable::row_ids(const IntegerPattern& z) {
  const int n = seed_.n();
  std::vector<int> ids;
  for (int m = 1; m <= n; ++m) {
    std::vector<int> zrow(m, 0);
    if (m < n)
      for (int j = 1; j <= m; ++j) zrow[j - 1] = z.at(m, j);
    ids.push_back(row_id(m, zrow));
  }
  return ids;
}

Fingerprint FingerprintTable::fingerprint(const IntegerPattern& z) {
  Fingerprint out;
  std::vector<int> ids = row_ids(z);
  for (int m = 1; m <= seed_.n(); ++m) {
    const auto& vals = row_values(m, ids[m - 1]);
    out.insert(out.end(), vals.begin(), vals.end());
  }
  return out;
}

std::string fingerprint_str(const Fingerprint& f) {
  std::string out = "(";
  for (std::size_t i = 0; i < f.size(); ++i) out += (i ? ", " : "") + f[i].str();
  return out + ")";
}

CanonicalBasisVector basis_vector_for(const SeedTableau& seed, const IntegerPattern& z) {
  return {canonical_index_for(seed, z), z};
}

std::vector<CanonicalBasisVector> window_vectors(const SeedTableau& seed, int B) {
  std::vector<CanonicalBasisVector> out;
  for_each_pattern(seed.n(), B, [&](const IntegerPattern& z) { out.push_back(basis_vector_for(seed, z)); });
  return out;
}

std::vector<CanonicalBasisVector> fiber_vectors(const SeedTableau& seed, const IntegerPattern& z) {
  std::set<CanonicalBasisVector> seen;
  for (std::uint32_t D = 0; D <= seed.all_pairs(); ++D) seen.insert(basis_vector_for(seed, tau_apply(seed, D, z)));
  return {seen.begin(), seen.end()};
}

FiberCount fiber_multiplicity(const SeedTableau& seed, const IntegerPattern& z) {
  FingerprintTable table(seed);
  const auto ids = table.row_ids(z);
  FiberCount out;
  for (const auto& b : fiber_vectors(seed, z))
    if (table.row_ids(b.pattern) == ids) ++out.count;
  out.expected = 1L << (seed.t() - critical_count(seed, z));
  return out;
}

namespace {

// Dense per-row lookup for window enumeration: row m of z is encoded in base 2B+1.
struct RowCodes {
  int B = 0;
  std::vector<std::vector<int>> id;        // [m-1][code]
  std::vector<std::vector<int>> critical;  // [m-1][code], critical pairs in the row
  std::vector<int> count;                  // codes per row
};

RowCodes build_row_codes(const SeedTableau& seed, FingerprintTable& table, int B) {
  const int n = seed.n(), base = 2 * B + 1;
  RowCodes rc;
  rc.B = B;
  for (int m = 1; m < n; ++m) {
    int total = 1;
    for (int j = 0; j < m; ++j) total *= base;
    rc.count.push_back(total);
    std::vector<int> ids(total), crit(total);
    for (int code = 0; code < total; ++code) {
      std::vector<int> zrow(m);
      int c = code;
      for (int j = m; j >= 1; --j) {
        zrow[j - 1] = c % base - B;
        c /= base;
      }
      ids[code] = table.row_id(m, zrow);
      int k = 0;
      for (const auto& tr : seed.singular())
        if (tr.k == m && zrow[tr.i - 1] == zrow[tr.j - 1]) ++k;
      crit[code] = k;
    }
    rc.id.push_back(std::move(ids));
    rc.critical.push_back(std::move(crit));
  }
  return rc;
}

template <class F>
void for_each_row_code(const RowCodes& rc, F&& f) {
  const int rows = static_cast<int>(rc.count.size());
  std::vector<int> code(rows, 0);
  for (;;) {
    f(code);
    int i = rows - 1;
    while (i >= 0 && code[i] == rc.count[i] - 1) code[i--] = 0;
    if (i < 0) return;
    ++code[i];
  }
}

}  // namespace

FiberAuditReport fiber_dimension_audit(const SeedTableau& seed, int B) {
  FiberAuditReport rep;
  rep.n = seed.n();
  rep.t = seed.t();
  rep.B = B;
  rep.patterns_by_critical.assign(seed.t() + 1, 0);
  if (B < 0 || seed.n() < 2) {
    rep.ok = B >= 0;
    return rep;
  }
  FingerprintTable table(seed);
  RowCodes rc = build_row_codes(seed, table, B);
  auto key_of = [&](const std::vector<int>& code) {
    std::uint64_t key = 0;
    for (std::size_t m = 0; m < code.size(); ++m) key = key * 1048583u + static_cast<std::uint64_t>(rc.id[m][code[m]]);
    return key;
  };
  // Hashed id tuples; a collision would be caught against the stored ids.
  struct Group {
    long count = 0;
    std::vector<int> ids;
  };
  std::unordered_map<std::uint64_t, Group> groups;
  for_each_row_code(rc, [&](const std::vector<int>& code) {
    Group& g = groups[key_of(code)];
    if (g.count == 0) {
      g.ids.resize(code.size());
      for (std::size_t m = 0; m < code.size(); ++m) g.ids[m] = rc.id[m][code[m]];
    } else {
      for (std::size_t m = 0; m < code.size(); ++m)
        if (g.ids[m] != rc.id[m][code[m]]) throw Error("fingerprint key collision");
    }
    ++g.count;
  });
  rep.fibers = static_cast<long>(groups.size());
  for_each_row_code(rc, [&](const std::vector<int>& code) {
    ++rep.patterns;
    int k = 0;
    for (std::size_t m = 0; m < code.size(); ++m) k += rc.critical[m][code[m]];
    ++rep.patterns_by_critical[k];
    const long expected = 1L << (seed.t() - k);
    const long got = groups[key_of(code)].count;
    if (got != expected) {
      ++rep.mismatches;
      if (rep.failures.size() < 10) {
        IntegerPattern z(seed.n());
        for (std::size_t m = 1; m <= code.size(); ++m) {
          int c = code[m - 1];
          for (int j = static_cast<int>(m); j >= 1; --j) {
            z.set(static_cast<int>(m), j, c % (2 * B + 1) - B);
            c /= 2 * B + 1;
          }
        }
        rep.failures.push_back("z=" + pattern_to_json(z) + " fiber " + std::to_string(got) + " expected " +
                               std::to_string(expected));
      }
    }
  });
  rep.ok = rep.mismatches == 0;
  return rep;
}

std::vector<CharacterRow> character_window(const SeedTableau& seed, int B) {
  std::map<Fingerprint, CharacterRow> rows;
  FingerprintTable table(seed);
  for_each_pattern(seed.n(), B, [&](const IntegerPattern& z) {
    Fingerprint f = table.fingerprint(z);
    CharacterRow& row = rows[f];
    if (row.dimension == 0) {
      row.fingerprint = f;
      row.critical = critical_count(seed, z);
      row.expected = 1L << (seed.t() - row.critical);
    }
    ++row.dimension;
  });
  std::vector<CharacterRow> out;
  for (auto& [f, row] : rows) out.push_back(std::move(row));
  return out;
}

int expected_geometric_multiplicity(const SeedTableau& seed, const IntegerPattern& z, int m) {
  int s = 0;
  for (const auto& tr : seed.singular())
    if (tr.k == m && z.at(tr.k, tr.i) != z.at(tr.k, tr.j)) ++s;
  return s + 1;
}

int geometric_multiplicity(const SingularModule& module, const IntegerPattern& z, int m, int k) {
  const SeedTableau& seed = module.seed();
  FingerprintTable table(seed);
  const ExactScalar g = table.row_values(m, table.row_ids(z)[m - 1])[k - 1];
  const auto fiber = fiber_vectors(seed, z);
  const int cap = static_cast<int>(fiber.size()) + 1;
  int best = 0;
  for (const auto& b : fiber) {
    ModuleElement e{{b, ExactScalar(1)}};
    int p = 0;
    while (!e.empty()) {
      if (p > cap) throw Error("c_mk - gamma is not nilpotent on the fiber");
      e = module.act_gamma(m, k, e) - scaled(e, g);
      ++p;
    }
    best = std::max(best, p);
  }
  return best;
}

namespace {

// Some permutation p of row b with a[j] - b[p(j)] integer (or zero when exact) for all j.
bool row_matches(const std::vector<ExactScalar>& a, std::vector<ExactScalar> b, bool exact) {
  std::sort(b.begin(), b.end());
  do {
    bool ok = true;
    for (std::size_t j = 0; j < a.size() && ok; ++j) {
      ExactScalar d = a[j] - b[j];
      ok = exact ? d.is_zero() : d.is_integer();
    }
    if (ok) return true;
  } while (std::next_permutation(b.begin(), b.end()));
  return false;
}

}  // namespace

bool iso_check(const SeedTableau& a, const SeedTableau& b) {
  if (a.n() != b.n()) throw Error("iso_check needs tableaux of equal rank");
  if (a.n() > kIsoCheckMaxRank)
    throw RankTooLarge("iso_check searches G exhaustively only up to rank " + std::to_string(kIsoCheckMaxRank));
  const int n = a.n();
  for (int i = 1; i <= n; ++i) {
    std::vector<ExactScalar> ra, rb;
    for (int j = 1; j <= i; ++j) {
      ra.push_back(a.at(i, j));
      rb.push_back(b.at(i, j));
    }
    if (!row_matches(ra, rb, i == n)) return false;
  }
  return true;
}

ReachGraph reachability(const SingularModule& module, const CanonicalBasisVector& source, int B, bool full) {
  const SeedTableau& seed = module.seed();
  const int n = seed.n();
  if (source.pattern.max_abs() > B) throw Error("source lies outside the window");
  ReachGraph g;
  g.caveat =
      "evidence only: a strongly connected finite window does not prove irreducibility of the infinite module";
  std::map<CanonicalBasisVector, int> index;
  auto node = [&](const CanonicalBasisVector& b) {
    auto [it, fresh] = index.emplace(b, static_cast<int>(g.nodes.size()));
    if (fresh) g.nodes.push_back(b);
    return it->second;
  };
  if (full)
    for (const auto& b : window_vectors(seed, B)) node(b);
  g.source = node(source);

  std::vector<bool> expanded;
  std::deque<int> queue;
  auto expand = [&](int i) {
    const CanonicalBasisVector b = g.nodes[i];
    for (int r = 1; r <= n; ++r)
      for (int s = 1; s <= n; ++s) {
        Generator gen{r, s};
        for (const auto& [target, c] : module.act(gen, b)) {
          if (target.pattern.max_abs() > B) continue;
          int before = static_cast<int>(g.nodes.size());
          int j = node(target);
          g.edges.push_back({i, j, gen});
          if (!full && j >= before) queue.push_back(j);
        }
      }
  };
  if (full) {
    for (int i = 0; i < static_cast<int>(g.nodes.size()); ++i) expand(i);
  } else {
    queue.push_back(g.source);
    std::set<int> done;
    while (!queue.empty()) {
      int i = queue.front();
      queue.pop_front();
      if (!done.insert(i).second) continue;
      expand(i);
    }
  }

  const int N = static_cast<int>(g.nodes.size());
  std::vector<std::vector<int>> adj(N);
  for (const auto& e : g.edges) adj[e.from].push_back(e.to);
  g.reached.assign(N, false);
  std::deque<int> bfs{g.source};
  g.reached[g.source] = true;
  while (!bfs.empty()) {
    int i = bfs.front();
    bfs.pop_front();
    for (int j : adj[i])
      if (!g.reached[j]) {
        g.reached[j] = true;
        bfs.push_back(j);
      }
  }

  using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::directedS>;
  Graph bg(N);
  for (const auto& e : g.edges) boost::add_edge(e.from, e.to, bg);
  g.component.assign(N, 0);
  g.components = N == 0 ? 0 : boost::strong_components(bg, g.component.data());
  std::vector<int> sizes(g.components, 0);
  for (int c : g.component) ++sizes[c];
  g.largest_component = sizes.empty() ? 0 : *std::max_element(sizes.begin(), sizes.end());
  return g;
}

namespace {

std::string node_label(const CanonicalBasisVector& b) {
  std::string I;
  for (int r = 1; r <= 32; ++r)
    if (b.index & (1u << (r - 1))) I += (I.empty() ? "" : ",") + std::to_string(r);
  return "D{" + I + "} " + pattern_to_json(b.pattern);
}

}  // namespace

std::string graph_to_dot(const ReachGraph& g) {
  std::ostringstream os;
  os << "digraph reach {\n  // " << g.caveat << "\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    os << "  n" << i << " [label=\"" << node_label(g.nodes[i]) << "\"" << (static_cast<int>(i) == g.source ? ", shape=box" : "")
       << (g.reached[i] ? "" : ", style=dashed") << "];\n";
  for (const auto& e : g.edges)
    os << "  n" << e.from << " -> n" << e.to << " [label=\"E" << e.g.r << e.g.s << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string graph_to_json(const ReachGraph& g) {
  using nlohmann::json;
  json nodes = json::array();
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    json node;
    json I = json::array();
    for (int r = 1; r <= 32; ++r)
      if (g.nodes[i].index & (1u << (r - 1))) I.push_back(r);
    node["I"] = I;
    node["z"] = json::parse(pattern_to_json(g.nodes[i].pattern));
    node["reached"] = static_cast<bool>(g.reached[i]);
    node["component"] = g.component[i];
    nodes.push_back(node);
  }
  json edges = json::array();
  for (const auto& e : g.edges) edges.push_back({{"from", e.from}, {"to", e.to}, {"r", e.g.r}, {"s", e.g.s}});
  json doc;
  doc["source"] = g.source;
  doc["nodes"] = nodes;
  doc["edges"] = edges;
  doc["components"] = g.components;
  doc["largest_component"] = g.largest_component;
  doc["caveat"] = g.caveat;
  return doc.dump();
}

SeedTableau verma_seed(int n, const std::vector<ExactScalar>& a) {
  if (n < 3 || n > kMaxRank) throw Error("the Verma construction needs 3 <= n <= " + std::to_string(kMaxRank));
  if (static_cast<int>(a.size()) != n - 1) throw Error("expected n-1 parameters");
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if ((a[i] - a[j]).is_integer()) throw Error("parameters must have pairwise non-integer differences");
  std::vector<ExactScalar> entries(tableau_size(n));
  for (int r = 1; r <= n; ++r)
    for (int i = 1; i <= r; ++i) entries[cell_index(r, i)] = i <= 2 ? a[0] : a[i - 2];
  std::vector<Triple> pairs;
  for (int r = 2; r <= n - 1; ++r) pairs.push_back({r, 1, 2});
  return validate_seed(n, std::move(entries), std::move(pairs));
}

namespace {

// Row-reduces in place; returns a basis with distinct leading vectors.
std::vector<ModuleElement> echelon(std::vector<ModuleElement> elems) {
  std::vector<ModuleElement> basis;
  for (auto& v : elems) {
    for (const auto& b : basis) {
      auto it = v.find(b.begin()->first);
      if (it == v.end()) continue;
      v = v - scaled(b, it->second / b.begin()->second);
    }
    if (v.empty()) continue;
    for (auto& b : basis) {
      auto it = b.find(v.begin()->first);
      if (it != b.end()) b = b - scaled(v, it->second / v.begin()->second);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

long span_dimension(std::vector<ModuleElement> elems) { return static_cast<long>(echelon(std::move(elems)).size()); }

std::map<std::vector<int>, std::vector<ModuleElement>> lowering_weight_spaces(const SingularModule& module,
                                                                              const CanonicalBasisVector& top, int depth) {
  const int n = module.n();
  std::vector<std::vector<int>> weights;
  std::vector<int> c(n - 1, 0);
  while (true) {
    weights.push_back(c);
    int i = 0;
    while (i < n - 1 && c[i] == depth) c[i++] = 0;
    if (i == n - 1) break;
    ++c[i];
  }
  auto total = [](const std::vector<int>& w) { return std::accumulate(w.begin(), w.end(), 0); };
  std::stable_sort(weights.begin(), weights.end(), [&](const auto& x, const auto& y) { return total(x) < total(y); });
  std::map<std::vector<int>, std::vector<ModuleElement>> spaces;
  spaces[weights.front()] = {ModuleElement{{top, ExactScalar(1)}}};
  for (std::size_t w = 1; w < weights.size(); ++w) {
    std::vector<ModuleElement> span;
    for (int j = 0; j < n - 1; ++j) {
      if (weights[w][j] == 0) continue;
      std::vector<int> above = weights[w];
      --above[j];
      for (const auto& v : spaces[above]) span.push_back(module.act(Generator{j + 2, j + 1}, v));
    }
    spaces[weights[w]] = echelon(std::move(span));
  }
  return spaces;
}

VermaReport verma_demo(int n, const std::vector<ExactScalar>& a, const ActionOptions& options, int depth) {
  VermaReport rep;
  rep.n = n;
  rep.a = a;
  SingularModule module(verma_seed(n, a), options);
  const SeedTableau& seed = module.seed();
  const CanonicalBasisVector top{0, IntegerPattern(n)};

  rep.highest_weight = true;
  for (int i = 1; i < n; ++i)
    if (!module.act(Generator{i, i + 1}, top).empty()) rep.highest_weight = false;

  bool weight_vector = true;
  for (int k = 1; k <= n; ++k) {
    ModuleElement e = module.act(Generator{k, k}, top);
    ExactScalar w = e.count(top) ? e.at(top) : ExactScalar(0);
    if (e.size() != (w.is_zero() ? 0u : 1u)) weight_vector = false;
    rep.weight.push_back(w);
    rep.expected_weight.push_back(k == 1 ? a[0] : a[k - 2] + ExactScalar(k - 1));
  }

  // E_21 lowers the first row, so the distinguished fiber sits at -sum_i delta^{i1}.
  IntegerPattern z(n);
  for (int i = 1; i < n; ++i) z.set(i, 1, -1);
  rep.fiber_pattern = z;
  const auto fiber = fiber_vectors(seed, z);
  rep.fiber_size = static_cast<long>(fiber.size());
  rep.expected_degree = 1L << (n - 2);
  ReachGraph g = reachability(module, top, 1, false);
  rep.explored_nodes = static_cast<long>(g.nodes.size());
  std::set<CanonicalBasisVector> reached;
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    if (g.reached[i]) reached.insert(g.nodes[i]);
  for (const auto& b : fiber) rep.fiber_reached += reached.count(b);

  // Gamma preserves the submodule, so its part in a generalized eigenspace is
  // the projection of the weight space onto that fiber's basis vectors.
  rep.depth = depth;
  FingerprintTable table(seed);
  const auto distinguished = table.row_ids(z);
  for (const auto& [w, space] : lowering_weight_spaces(module, top, depth)) {
    std::map<std::vector<int>, std::vector<ModuleElement>> parts;
    for (const auto& v : space) {
      std::map<std::vector<int>, ModuleElement> split;
      for (const auto& [b, c] : v) split[table.row_ids(b.pattern)].emplace(b, c);
      for (auto& [ids, part] : split) parts[ids].push_back(std::move(part));
    }
    for (auto& [ids, elems] : parts) {
      const long d = span_dimension(std::move(elems));
      if (ids == distinguished) rep.fiber_rank = d;
      if (d > rep.gt_degree) {
        rep.gt_degree = d;
        rep.gt_degree_weight = w;
      }
    }
  }

  bool geometric_ok = true;
  for (int k = 2; k <= n - 1; ++k) {
    rep.geometric.push_back(geometric_multiplicity(module, z, k, 2));
    if (rep.geometric.back() != 2) geometric_ok = false;
  }
  rep.ok = rep.highest_weight && weight_vector && rep.weight == rep.expected_weight &&
           rep.fiber_size == rep.expected_degree && rep.fiber_reached == rep.expected_degree && rep.gt_degree == rep.expected_degree && geometric_ok;
  return rep;
}

BoundReport fiber_bound_audit(const SingularModule& module, const CanonicalBasisVector& source, int B) {
  const SeedTableau& seed = module.seed();
  ReachGraph g = reachability(module, source, B, false);
  FingerprintTable table(seed);
  std::map<std::vector<int>, std::pair<long, long>> groups;  // ids -> (count, bound)
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    if (!g.reached[i]) continue;
    const IntegerPattern& z = g.nodes[i].pattern;
    auto& grp = groups[table.row_ids(z)];
    ++grp.first;
    grp.second = 1L << (seed.t() - critical_count(seed, z));
  }
  BoundReport rep;
  for (const auto& [ids, grp] : groups) {
    ++rep.checks;
    if (grp.first > grp.second) {
      ++rep.violations;
      if (rep.failures.size() < 10)
        rep.failures.push_back("fiber of size " + std::to_string(grp.first) + " exceeds " + std::to_string(grp.second));
    }
  }
  return rep;
}

BoundReport jordan_bound_audit(const SingularModule& module, int B) {
  const SeedTableau& seed = module.seed();
  const int n = seed.n();
  std::vector<int> pairs_in_row(n + 1, 0);
  for (const auto& tr : seed.singular()) ++pairs_in_row[tr.k];
  BoundReport rep;
  std::set<IntegerPattern> done;
  for_each_pattern(n, B, [&](const IntegerPattern& z) {
    IntegerPattern rep_z = z;
    for (std::uint32_t D = 0; D <= seed.all_pairs(); ++D) rep_z = std::min(rep_z, tau_apply(seed, D, z));
    if (!done.insert(rep_z).second) return;
    for (int m = 1; m <= n; ++m)
      for (int k = 1; k <= m; ++k) {
        ++rep.checks;
        int gm = geometric_multiplicity(module, z, m, k);
        int bound = pairs_in_row[m] + 1;
        if (gm > bound || (k == 2 && gm != expected_geometric_multiplicity(seed, z, m))) {
          ++rep.violations;
          if (rep.failures.size() < 10)
            rep.failures.push_back("z=" + pattern_to_json(z) + " c_" + std::to_string(m) + std::to_string(k) +
                                   " multiplicity " + std::to_string(gm) + " bound " + std::to_string(bound));
        }
      }
  });
  return rep;
}

}  // namespace gtmod
