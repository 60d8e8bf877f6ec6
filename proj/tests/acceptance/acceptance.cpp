// Runs the nine acceptance criteria with the default configuration and prints
// one PASS/FAIL line per criterion. Exit status is nonzero if any fails.
#include <cstdio>
#include <string>
#include <vector>

#include "gtmod/verify.hpp"

using namespace gtmod;

namespace {

struct Line {
  int id;
  std::string title;
  bool ok;
  std::string detail;
};

std::string summary(const SuiteReport& r) {
  long checks = 0;
  for (const auto& c : r.checks) checks += c.checks;
  char buf[128];
  std::snprintf(buf, sizeof buf, "%ld checks in %.1fs", checks, r.seconds);
  return buf;
}

std::string first_failure(const SuiteReport& r) {
  for (const auto& c : r.checks)
    if (!c.passed()) return c.name + (c.counterexamples.empty() ? "" : ": " + c.counterexamples.front());
  if (r.audit.mismatches) return r.audit.failures.empty() ? "oracle mismatch" : r.audit.failures.front();
  return {};
}

const CheckResult* find_check(const SuiteReport& r, const std::string& prefix) {
  for (const auto& c : r.checks)
    if (c.name.rfind(prefix, 0) == 0) return &c;
  return nullptr;
}

}  // namespace

int main() {
  VerifyConfig config;
  std::vector<Line> lines;
  AuditStats audit;
  auto run = [&](const std::string& name) {
    SuiteReport r = run_suite(name, config);
    std::fprintf(stderr, "%s", report_to_text(r).c_str());
    return r;
  };
  auto add_audit = [&](const SuiteReport& r) {
    audit.sampled += r.audit.sampled;
    audit.mismatches += r.audit.mismatches;
  };
  auto suite_line = [&](int id, const std::string& title, const SuiteReport& r) {
    lines.push_back({id, title, r.passed(), r.passed() ? summary(r) : first_failure(r)});
  };

  SuiteReport bracket = run("bracket");
  suite_line(1, "bracket closure on the reference seeds", bracket);
  add_audit(bracket);

  SuiteReport fibers = run("theoremA");
  suite_line(2, "fiber dimensions 2^(t-k) over full windows", fibers);
  add_audit(fibers);

  SuiteReport gamma = run("gamma");
  suite_line(3, "Gamma action, commutativity, nilpotency, generating function", gamma);
  add_audit(gamma);

  SuiteReport jordan_suite = run("theoremB");
  const CheckResult* jordan = find_check(jordan_suite, "geometric multiplicity of c_k2 is s+1");
  lines.push_back({4, "geometric multiplicity of c_k2 is s+1", jordan && jordan->passed(),
                   !jordan ? "check missing"
                   : jordan->passed()
                       ? std::to_string(jordan->checks) + " checks"
                       : (jordan->counterexamples.empty() ? "failed" : jordan->counterexamples.front())});
  add_audit(jordan_suite);

  SuiteReport verma = run("verma");
  suite_line(5, "Verma module demonstration for n = 3, 4", verma);
  add_audit(verma);

  SuiteReport identities = run("identities");
  suite_line(6, "divided-difference identities", identities);

  SuiteReport oracle = run("oracle");
  const bool audit_ok = audit.sampled > 0 && audit.mismatches == 0;
  lines.push_back({7, "jet path and symbolic oracle agree", oracle.passed() && audit_ok,
                   (oracle.passed() ? summary(oracle) : first_failure(oracle)) + "; spot checks over criteria 1-5: " +
                       std::to_string(audit.sampled) + " coefficients, " + std::to_string(audit.mismatches) +
                       " mismatches"});

  SuiteReport fd = run("fd");
  suite_line(8, "finite-dimensional modules match the Weyl formula", fd);

  SuiteReport generic = run("generic");
  suite_line(9, "t = 0 reproduces the generic action", generic);

  int failed = 0;
  for (const auto& l : lines) {
    std::printf("criterion %d %s: %s (%s)\n", l.id, l.title.c_str(), l.ok ? "PASS" : "FAIL", l.detail.c_str());
    failed += !l.ok;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(lines.size()) - failed, lines.size());
  return failed ? 1 : 0;
}
