#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include <eqlog/eqlog.hpp>

namespace {

using namespace eqlog;

Vocabulary vocab_of_size(int n) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    names.push_back("v" + std::to_string(i));
  }
  return Vocabulary(names);
}

// Even negative loop over n atoms: v0 :- not v1. v1 :- not v2. ...
Program loop_program(int n) {
  Program p;
  for (int i = 0; i < n; ++i) {
    p.rules.push_back(Rule{{"v" + std::to_string(i)},
                           {},
                           {"v" + std::to_string((i + 1) % n)}});
  }
  return p;
}

void BM_enumerate(benchmark::State& state) {
  const Vocabulary v = vocab_of_size(static_cast<int>(state.range(0)));
  const Limits lim{20};
  for (auto _ : state) {
    std::size_t count = 0;
    for ([[maybe_unused]] const Interpretation& m :
         enumerate_interpretations(v, lim)) {
      ++count;
    }
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_enumerate)->Arg(6)->Arg(8)->Arg(10);

void BM_equilibrium_models(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Program p = loop_program(n);
  const Theory t = program_to_theory(p);
  const Vocabulary v = vocabulary_of(p);
  const Limits lim{20};
  for (auto _ : state) {
    benchmark::DoNotOptimize(equilibrium_models(t, v, lim).models.size());
  }
}
BENCHMARK(BM_equilibrium_models)->Arg(4)->Arg(8)->Arg(12);

void BM_answer_sets_dual_route(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Program p = loop_program(n);
  const Vocabulary v = vocabulary_of(p);
  const Limits lim{20};
  for (auto _ : state) {
    benchmark::DoNotOptimize(answer_sets(p, v, lim).size());
  }
}
BENCHMARK(BM_answer_sets_dual_route)->Arg(4)->Arg(8)->Arg(12);

void BM_interpolate_cw(benchmark::State& state) {
  const FormulaPtr a = parse_formula("(p | -p) & (-p -> q) & (q -> r)");
  const FormulaPtr b = parse_formula("(q | s) & (r | -s)");
  for (auto _ : state) {
    benchmark::DoNotOptimize(interpolant_cw(a, b).interpolant);
  }
}
BENCHMARK(BM_interpolate_cw);

void BM_project(benchmark::State& state) {
  const Theory t{parse_formula("(a | b) & (-b -> c) & (c -> (d | a))")};
  const Vocabulary w({"a", "d"});
  for (auto _ : state) {
    benchmark::DoNotOptimize(project(t, w));
  }
}
BENCHMARK(BM_project);

}  // namespace

BENCHMARK_MAIN();
