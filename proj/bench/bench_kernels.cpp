// Serial reference vs OpenMP kernels.

#include "seifert/builder.hpp"
#include "seifert/io.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace seifert;

namespace {

PLCycle wiggly(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> u(0, 996);
  std::vector<Vec2> disp;
  Vec2 sum{Rational(0), Rational(0)};
  for (std::size_t i = 0; i + 1 < n; ++i) {
    Vec2 d{Rational(u(rng) - 498, 997 * 4), Rational(u(rng) - 498, 997 * 4)};
    d.x.canonicalize();
    d.y.canonicalize();
    disp.push_back(d);
    sum = sum + d;
  }
  disp.push_back(Vec2{Rational(1), Rational(2)} - sum);
  return PLCycle::from_displacements({Rational(1, 7), Rational(1, 11)}, disp);
}

std::vector<KnotDiagram> batch(std::size_t count) {
  std::vector<KnotDiagram> out;
  for (std::uint64_t seed = 0; out.size() < count; ++seed) {
    try {
      out.push_back(to_diagram(gen_random(make_lens(5, 2), {1, 1}, 4, seed)));
    } catch (const Error&) {
    }
  }
  return out;
}

void BM_contacts_serial(benchmark::State& st) {
  const PLCycle a = wiggly(st.range(0), 1), b = wiggly(st.range(0), 2);
  for (auto _ : st) benchmark::DoNotOptimize(detail::enumerate_contacts_serial(a, b, false));
}

void BM_contacts_parallel(benchmark::State& st) {
  const PLCycle a = wiggly(st.range(0), 1), b = wiggly(st.range(0), 2);
  for (auto _ : st) benchmark::DoNotOptimize(detail::enumerate_contacts_parallel(a, b, false));
}

void BM_build_batch_serial(benchmark::State& st) {
  const auto ds = batch(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(build_batch_serial(ds));
}

void BM_build_batch_parallel(benchmark::State& st) {
  const auto ds = batch(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(build_batch(ds));
}

}  // namespace

BENCHMARK(BM_contacts_serial)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_contacts_parallel)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_build_batch_serial)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_build_batch_parallel)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
