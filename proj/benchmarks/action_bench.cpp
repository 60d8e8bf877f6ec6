#include <benchmark/benchmark.h>

#include "gtmod/analysis.hpp"
#include "gtmod/singular_module.hpp"
#include "gtmod/verify.hpp"

using namespace gtmod;

namespace {

const NamedSeed& seed_at(int i) {
  static const std::vector<NamedSeed> seeds = reference_seeds();
  return seeds[i];
}

// One generator on one sampled vector, box-truncated path vs literal jets.
void BM_Act(benchmark::State& state) {
  const NamedSeed& s = seed_at(static_cast<int>(state.range(0)));
  ActionOptions opt;
  opt.cancel_monomials = state.range(1) != 0;
  SingularModule m(s.seed, opt);
  const auto vs = sample_vectors(s.seed, 16, 2, 1);
  std::size_t i = 0;
  const int n = s.seed.n();
  for (auto _ : state) {
    const Generator g{1 + static_cast<int>(i % n), 1 + static_cast<int>((i / n) % n)};
    benchmark::DoNotOptimize(m.act(g, vs[i % vs.size()]));
    ++i;
  }
  state.SetLabel(s.name + (opt.cancel_monomials ? " box" : " literal"));
}
BENCHMARK(BM_Act)->ArgsProduct({{0, 1, 3}, {0, 1}})->Unit(benchmark::kMicrosecond);

// Every bracket relation on one basis vector.
void BM_BracketVector(benchmark::State& state) {
  const NamedSeed& s = seed_at(static_cast<int>(state.range(0)));
  const int n = s.seed.n();
  const auto vs = sample_vectors(s.seed, 4, 2, 2);
  std::size_t i = 0;
  for (auto _ : state) {
    SingularModule m(s.seed);
    const ModuleElement e{{vs[i++ % vs.size()], ExactScalar(1)}};
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b)
        for (int c = 1; c <= n; ++c)
          for (int d = 1; d <= n; ++d) {
            const Generator x{a, b}, y{c, d};
            GlElement comm{{ExactScalar(1), {x, y}}, {ExactScalar(-1), {y, x}}};
            benchmark::DoNotOptimize(m.act_element(comm, e) == m.act_element(bracket(x, y), e));
          }
  }
  state.SetLabel(s.name);
}
BENCHMARK(BM_BracketVector)->Arg(0)->Arg(1)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_FiberWindow(benchmark::State& state) {
  const NamedSeed& s = seed_at(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fiber_dimension_audit(s.seed, 2).ok);
  state.SetLabel(s.name);
}
BENCHMARK(BM_FiberWindow)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
