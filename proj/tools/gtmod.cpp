#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "gtmod/analysis.hpp"
#include "gtmod/errors.hpp"
#include "gtmod/io.hpp"
#include "gtmod/verify.hpp"
#include "json.hpp"

using namespace gtmod;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kInputError = 2, kPrecision = 3 };

struct Options {
  std::string tableau;
  int K = 6;
  int window = 2;
  std::uint64_t seed = 1;
  int samples = 100;
  int trees = 500;
  double audit_rate = 0.01;
  std::string format = "json";
  std::vector<std::string> suites;
  std::vector<int> gen;
  std::string index = "[]";
  std::string z;
  int n = 3;
  std::vector<std::string> values;
  bool bfs = false;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

TableauInput load(const Options& o) {
  if (o.tableau.empty()) throw ParseError("--tableau is required");
  return parse_tableau(slurp(o.tableau));
}

ActionOptions action_options(const Options& o) {
  if (o.K < 2 || o.K > kMaxTruncation) throw ParseError("--k-order must lie in [2, 64]");
  ActionOptions a;
  a.K = o.K;
  a.audit_seed = o.seed;
  return a;
}

std::vector<ExactScalar> scalars(const std::vector<std::string>& v) {
  std::vector<ExactScalar> out;
  for (const auto& s : v) out.push_back(ExactScalar::parse(s));
  return out;
}

CanonicalBasisVector source_vector(const TableauInput& in, const Options& o) {
  const int n = in.seed.n();
  IntegerPattern z = o.z.empty() ? IntegerPattern(n) : parse_pattern(n, o.z);
  z = z + in.z0;
  const std::uint32_t index = parse_index(in.seed.t(), o.index);
  Canonical c = canonicalize(in.seed, index, z);
  if (c.sign == 0) throw ParseError("the requested basis vector is zero (I contains a critical pair)");
  return c.vector;
}

int cmd_act(const Options& o) {
  TableauInput in = load(o);
  if (o.gen.size() != 2) throw ParseError("--gen takes two indices");
  SingularModule module(in.seed, action_options(o));
  const CanonicalBasisVector b = source_vector(in, o);
  ModuleElement e = module.act(Generator{o.gen[0], o.gen[1]}, b);
  if (o.format == "text")
    std::cout << module_element_to_text(e) << "\n";
  else
    std::cout << module_element_to_json(e) << "\n";
  return kOk;
}

int cmd_verify(const Options& o) {
  VerifyConfig config;
  config.K = o.K;
  config.window = o.window;
  config.seed = o.seed;
  config.samples = o.samples;
  config.trees = o.trees;
  config.audit_rate = o.audit_rate;
  if (config.K < 2 || config.window < 0) throw ParseError("--k-order must be at least 2 and --window nonnegative");
  std::vector<std::string> names = o.suites.empty() ? suite_names() : o.suites;
  bool ok = true;
  json all = json::array();
  for (const auto& name : names) {
    if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end())
      throw ParseError("unknown suite " + name);
    SuiteReport r = run_suite(name, config);
    ok &= r.passed();
    if (o.format == "text")
      std::cout << report_to_text(r) << std::flush;
    else
      all.push_back(json::parse(report_to_json(r)));
  }
  if (o.format != "text") std::cout << all.dump(2) << "\n";
  return ok ? kOk : kCheckFailed;
}

int cmd_explore(const Options& o) {
  TableauInput in = load(o);
  SingularModule module(in.seed, action_options(o));
  ReachGraph g = reachability(module, source_vector(in, o), o.window, !o.bfs);
  std::cout << (o.format == "dot" ? graph_to_dot(g) : graph_to_json(g)) << "\n";
  return kOk;
}

int cmd_character(const Options& o) {
  TableauInput in = load(o);
  auto rows = character_window(in.seed, o.window);
  bool ok = true;
  json table = json::array();
  for (const auto& r : rows) {
    ok &= r.dimension == r.expected;
    if (o.format == "text") {
      std::cout << fingerprint_str(r.fingerprint) << "  dim " << r.dimension << "  expected " << r.expected
                << "  critical " << r.critical << "\n";
    } else {
      json fp = json::array();
      for (const auto& x : r.fingerprint) fp.push_back(x.str());
      table.push_back({{"gamma", fp}, {"dimension", r.dimension}, {"expected", r.expected}, {"critical", r.critical}});
    }
  }
  if (o.format != "text") std::cout << table.dump(2) << "\n";
  return ok ? kOk : kCheckFailed;
}

json scalar_list(const std::vector<ExactScalar>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

int cmd_verma(const Options& o) {
  std::vector<ExactScalar> a = scalars(o.values);
  if (static_cast<int>(a.size()) != o.n - 1) throw ParseError("--a needs n-1 values");
  VermaReport r = verma_demo(o.n, a, action_options(o));
  if (o.format == "text") {
    std::cout << "highest weight vector: " << (r.highest_weight ? "yes" : "no") << "\n"
              << "fiber size " << r.fiber_size << ", reached " << r.fiber_reached << ", expected "
              << r.expected_degree << ", dimension in the submodule " << r.fiber_rank << "\n"
              << "GT-degree of the submodule " << r.gt_degree << "\n";
    std::cout << "weight:";
    for (const auto& x : r.weight) std::cout << " " << x.str();
    std::cout << "\ngeometric multiplicities:";
    for (int g : r.geometric) std::cout << " " << g;
    std::cout << "\n" << (r.ok ? "PASS" : "FAIL") << "\n";
  } else {
    json doc = {{"n", r.n},
                {"a", scalar_list(r.a)},
                {"highest_weight", r.highest_weight},
                {"weight", scalar_list(r.weight)},
                {"expected_weight", scalar_list(r.expected_weight)},
                {"fiber", json::parse(pattern_to_json(r.fiber_pattern))},
                {"fiber_size", r.fiber_size},
                {"fiber_reached", r.fiber_reached},
                {"expected_degree", r.expected_degree},
                {"geometric", r.geometric},
                {"explored_nodes", r.explored_nodes},
                {"fiber_rank", r.fiber_rank},
                {"submodule_gt_degree", r.gt_degree},
                {"submodule_gt_degree_weight", r.gt_degree_weight},
                {"passed", r.ok}};
    std::cout << doc.dump(2) << "\n";
  }
  return r.ok ? kOk : kCheckFailed;
}

int cmd_fd(const Options& o) {
  FdReport r = fd_module(scalars(o.values));
  if (o.format == "text") {
    std::cout << "dimension " << r.dimension << ", closure " << (r.closure_ok ? "ok" : "FAILED") << "\n";
  } else {
    json doc = {{"n", r.n},
                {"lambda", scalar_list(r.lambda)},
                {"dimension", r.dimension},
                {"bracket_checks", r.bracket_checks},
                {"bracket_failures", r.bracket_failures},
                {"closure_ok", r.closure_ok}};
    std::cout << doc.dump(2) << "\n";
  }
  return r.closure_ok ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Gelfand-Tsetlin modules with singular tableaux"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* c) {
    c->add_option("--k-order", o.K, "jet truncation order");
    c->add_option("--seed", o.seed, "random seed");
    c->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "text", "dot"}));
  };
  auto tableau_opts = [&](CLI::App* c) {
    c->add_option("--tableau", o.tableau, "tableau JSON file")->required();
    c->add_option("--I", o.index, "derivative index, JSON list of 1-based pairs");
    c->add_option("--z", o.z, "integer shift, JSON rows n-1 down to 1");
  };

  auto* act = app.add_subcommand("act", "apply one generator E_rs to a basis vector");
  common(act);
  tableau_opts(act);
  act->add_option("--gen", o.gen, "generator indices r s")->expected(2)->required();

  auto* verify = app.add_subcommand("verify", "run invariant suites");
  common(verify);
  verify->add_option("--suite", o.suites, "suite name (repeatable); default all");
  verify->add_option("--window", o.window, "window bound B");
  verify->add_option("--samples", o.samples, "basis vectors per seed for bracket checks");
  verify->add_option("--trees", o.trees, "random expression trees for the oracle suite");
  verify->add_option("--audit-rate", o.audit_rate, "fraction of coefficients re-derived by the oracle");

  auto* explore = app.add_subcommand("explore", "reachability graph inside a window");
  common(explore);
  tableau_opts(explore);
  explore->add_option("--window", o.window, "window bound B");
  explore->add_flag("--bfs", o.bfs, "expand only vectors reached from the source");

  auto* character = app.add_subcommand("character", "fiber dimension table over a window");
  common(character);
  character->add_option("--tableau", o.tableau, "tableau JSON file")->required();
  character->add_option("--window", o.window, "window bound B");

  auto* verma = app.add_subcommand("verma", "Verma module demonstration");
  common(verma);
  verma->add_option("--n", o.n, "rank")->required();
  verma->add_option("--a", o.values, "parameters a1..a_{n-1}")->required();

  auto* fd = app.add_subcommand("fd", "finite-dimensional module on standard tableaux");
  common(fd);
  fd->add_option("--lambda", o.values, "highest weight")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*act) return cmd_act(o);
    if (*verify) return cmd_verify(o);
    if (*explore) return cmd_explore(o);
    if (*character) return cmd_character(o);
    if (*verma) return cmd_verma(o);
    if (*fd) return cmd_fd(o);
  } catch (const SeedValidationError& e) {
    json issues = json::array();
    for (const auto& i : e.issues) issues.push_back({{"kind", i.kind}, {"detail", i.detail}});
    std::cout << json{{"error", "invalid tableau"}, {"issues", issues}}.dump(2) << "\n";
    return kInputError;
  } catch (const PrecisionExhausted& e) {
    std::cerr << "precision exhausted: " << e.what() << "\n";
    return kPrecision;
  } catch (const ParseError& e) {
    std::cout << json{{"error", "input"}, {"detail", e.what()}}.dump(2) << "\n";
    return kInputError;
  } catch (const IndexOutOfRange& e) {
    std::cout << json{{"error", "input"}, {"detail", e.what()}}.dump(2) << "\n";
    return kInputError;
  } catch (const RankTooLarge& e) {
    std::cout << json{{"error", "input"}, {"detail", e.what()}}.dump(2) << "\n";
    return kInputError;
  }
  return kInputError;
}
