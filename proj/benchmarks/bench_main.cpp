#include <benchmark/benchmark.h>

#include <random>

#include "condenv/capacity.hpp"
#include "condenv/coherence.hpp"
#include "condenv/envelopes.hpp"
#include "condenv/lp.hpp"
#include "fixtures.hpp"

using namespace condenv;

namespace {

// Random dense feasibility problem: a probability vector with k fixed marginals.
LinearProgram random_lp(std::size_t n, std::size_t k, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coin(0, 1);
  LinearProgram lp(n);
  lp.add_eq(std::vector<Rational>(n, Rational(1)), Rational(1));
  const auto p = fixtures::random_distribution(rng, n, false);
  for (std::size_t r = 0; r < k; ++r) {
    std::vector<Rational> row(n);
    Rational rhs;
    for (std::size_t i = 0; i < n; ++i)
      if (coin(rng)) {
        row[i] = 1;
        rhs += p[i];
      }
    lp.add_eq(std::move(row), rhs);
  }
  std::vector<Rational> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = static_cast<long>(i % 3);
  lp.set_objective(std::move(c), LinearProgram::Sense::Maximize);
  return lp;
}

void BM_Simplex(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto lp = random_lp(n, n / 2, 7);
  for (auto _ : state) benchmark::DoNotOptimize(lp.solve());
}
BENCHMARK(BM_Simplex)->Arg(8)->Arg(16)->Arg(32);

void BM_OracleInterval(benchmark::State& state) {
  std::mt19937 rng(11);
  const auto inst = fixtures::random_instance(rng, static_cast<std::size_t>(state.range(0)), 2);
  const std::size_t n = inst.space.atom_count();
  const Event f = Event::from_mask(n, 0b0101), k = Event::from_mask(n, 0b0111);
  for (auto _ : state) {
    ExtensionOracle oracle(inst.space, assessment_from_prior_strategy(inst.space, inst.prior, inst.sigma));
    benchmark::DoNotOptimize(oracle.interval(f, k));
  }
}
BENCHMARK(BM_OracleInterval)->Arg(2)->Arg(3);

template <class Fn>
void envelope_sweep(benchmark::State& state, Fn fn) {
  std::mt19937 rng(13);
  const auto inst = fixtures::random_instance(rng, 3, 2);
  const std::size_t n = inst.space.atom_count();
  for (auto _ : state)
    for (unsigned long long k = 1; k < (1ULL << n); k += 5)
      for (unsigned long long f = 0; f < (1ULL << n); f += 7)
        benchmark::DoNotOptimize(fn(inst, Event::from_mask(n, f), Event::from_mask(n, k)));
}

void BM_CoherentEnvelope(benchmark::State& state) {
  envelope_sweep(state, [](const Instance& i, const Event& f, const Event& k) { return conditional_envelope(i, f, k); });
}
BENCHMARK(BM_CoherentEnvelope);

void BM_DisintegrableEnvelope(benchmark::State& state) {
  envelope_sweep(state, [](const Instance& i, const Event& f, const Event& k) { return dis_extension_envelope(i, f, k); });
}
BENCHMARK(BM_DisintegrableEnvelope);

void BM_FullyDisEnvelope(benchmark::State& state) {
  envelope_sweep(state, [](const Instance& i, const Event& f, const Event& k) { return fully_dis_envelope(i, f, k); });
}
BENCHMARK(BM_FullyDisEnvelope);

void BM_BayesGrid(benchmark::State& state) {
  const auto k = static_cast<unsigned>(state.range(0));
  const auto inst = fixtures::bayes_grid(k, 10);
  Event a = inst.space.row(0);
  for (unsigned j = 1; j <= k / 2; ++j) a |= inst.space.row(j);
  const Event b = inst.space.column(2);
  for (auto _ : state) benchmark::DoNotOptimize(fully_dis_envelope(inst, a, b));
}
BENCHMARK(BM_BayesGrid)->Arg(50)->Arg(200);

void BM_CoreVertices(benchmark::State& state) {
  const auto g = static_cast<std::size_t>(state.range(0));
  std::vector<Mask> blocks;
  for (std::size_t i = 0; i + 1 < g; i += 2) blocks.push_back(Mask{3} << i);
  if (g % 2) blocks.push_back(Mask{1} << (g - 1));
  std::vector<Rational> mass(blocks.size(), Rational(1, static_cast<unsigned long>(blocks.size())));
  const auto v = inner_measure(g, blocks, mass);
  for (auto _ : state) benchmark::DoNotOptimize(core_vertices(v));
}
BENCHMARK(BM_CoreVertices)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
