// Serial reference loop vs. OpenMP trial loop, plus the single-term kernels
// the trials spend their time in.

#include <benchmark/benchmark.h>

#include "termdepth/hypersubstitution.hpp"
#include "termdepth/measures.hpp"
#include "termdepth/occurrence_depth.hpp"
#include "termdepth/textio.hpp"
#include "termdepth/verify.hpp"

namespace td = termdepth;

namespace {

td::GenConfig occurrence_config() {
  td::GenConfig cfg;
  cfg.max_depth = 6;
  cfg.projection_rate = td::Probability::parse("0.2");
  cfg.deletion_bias = td::Probability::parse("0.3");
  return cfg;
}

void run_check(benchmark::State& state, td::TheoremKind kind, bool parallel) {
  const auto sig = td::parse_signature("f1/2\nf2/3");
  auto cfg = occurrence_config();
  td::CheckOptions opts;
  opts.parallel = parallel;
  opts.shrink = false;
  const auto trials = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(td::check_theorem(kind, trials, cfg, sig, opts));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_Thm51Serial(benchmark::State& s) { run_check(s, td::TheoremKind::Thm5_1, false); }
void BM_Thm51Parallel(benchmark::State& s) { run_check(s, td::TheoremKind::Thm5_1, true); }
void BM_Thm33Serial(benchmark::State& s) { run_check(s, td::TheoremKind::Thm3_3, false); }
void BM_Thm33Parallel(benchmark::State& s) { run_check(s, td::TheoremKind::Thm3_3, true); }

BENCHMARK(BM_Thm51Serial)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Thm51Parallel)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Thm33Serial)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Thm33Parallel)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

td::Term comb(std::size_t depth) {
  td::Term t = td::Term::variable(1);
  for (std::size_t k = 0; k < depth; ++k) t = td::Term::apply("f", {t, td::Term::variable(2)});
  return t;
}

void BM_BOfComb(benchmark::State& state) {
  const auto sig = td::parse_signature("f/2");
  const auto sigma = td::parse_hyp("f -> f(f(x2,x1),x2)", sig);
  const td::DepthTable table(sigma);
  const auto t = comb(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(td::b_of(table, t));
}
BENCHMARK(BM_BOfComb)->Arg(1000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_DepthWrtComb(benchmark::State& state) {
  const auto t = comb(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(td::depth_wrt(t, 1));
}
BENCHMARK(BM_DepthWrtComb)->Arg(1000)->Arg(100000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
