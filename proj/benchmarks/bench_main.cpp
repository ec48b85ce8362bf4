#include <benchmark/benchmark.h>

#include "promisecc/automata.hpp"
#include "promisecc/bounds.hpp"
#include "promisecc/operators.hpp"
#include "promisecc/protocols.hpp"

using namespace promisecc;

namespace {

BitString alternating(int n) {
  std::string s;
  for (int i = 0; i < n; ++i) s.push_back(i % 2 ? '0' : '1');
  return BitString::parse(s);
}

void BM_ApplyStructured(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto op = build_phase_oracle(alternating(n));
  const auto psi = build_uh(n).apply(build_uk(n, n).apply(StateVector::basis(static_cast<std::size_t>(n) + 1, 0)));
  for (auto _ : state) benchmark::DoNotOptimize(op.apply(psi));
}
BENCHMARK(BM_ApplyStructured)->RangeMultiplier(4)->Range(16, 4096);

void BM_ApplyDense(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto op = build_uh(n);
  const auto psi = StateVector::basis(static_cast<std::size_t>(n) + 1, 1);
  for (auto _ : state) benchmark::DoNotOptimize(op.apply(psi));
}
BENCHMARK(BM_ApplyDense)->RangeMultiplier(4)->Range(16, 1024);

void BM_EqkProtocol(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  EqkQuantumProtocol proto(n, n);
  const auto x = alternating(n);
  for (auto _ : state) benchmark::DoNotOptimize(proto.run(x, x));
}
BENCHMARK(BM_EqkProtocol)->RangeMultiplier(4)->Range(8, 512);

void BM_DisjAutomaton(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto a = build_automaton_disj(n);
  const auto x = alternating(n).to_string();
  const auto word = x + "#" + x + "#" + x;
  for (auto _ : state) benchmark::DoNotOptimize(simulate_mo1qcfa(a, word));
}
BENCHMARK(BM_DisjAutomaton)->RangeMultiplier(2)->Range(4, 64);

void BM_MaxFamily(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(max_family_avoiding(n, n / 2).max_size);
}
BENCHMARK(BM_MaxFamily)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
