#include <benchmark/benchmark.h>

#include "bfl/braid.hpp"
#include "bfl/diagram.hpp"
#include "bfl/frobenius.hpp"
#include "bfl/twist.hpp"

namespace {

using namespace bfl;

HopfAlgebra group(std::size_t n) { return build_group_algebra(Ring::rationals(), {n}); }

void BM_ComposeMuDelta(benchmark::State& state) {
  const auto h = group(static_cast<std::size_t>(state.range(0)));
  const auto m = tensor(h.mu(), h.mu());
  const auto d = tensor(h.delta(), h.delta());
  for (auto _ : state) benchmark::DoNotOptimize(compose(d, m));
}
BENCHMARK(BM_ComposeMuDelta)->Arg(2)->Arg(4)->Arg(9);

void BM_TensorBeta(benchmark::State& state) {
  const auto b = build_braid(group(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(tensor(*b.beta, *b.beta1));
}
BENCHMARK(BM_TensorBeta)->Arg(2)->Arg(3);

void BM_YBEDense(benchmark::State& state) {
  const auto b = build_braid(group(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(check_YBE(b.beta));
}
BENCHMARK(BM_YBEDense)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_YBEStreamed(benchmark::State& state) {
  const auto b = build_braid(group(static_cast<std::size_t>(state.range(0))));
  CompareOptions opt;
  opt.stream_threshold = 1;
  for (auto _ : state) benchmark::DoNotOptimize(check_YBE(b.beta, opt));
}
BENCHMARK(BM_YBEStreamed)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_TSDStreamed(benchmark::State& state) {
  const auto op = heap_operation(group(static_cast<std::size_t>(state.range(0))));
  CompareOptions opt;
  opt.stream_threshold = 1;
  for (auto _ : state) benchmark::DoNotOptimize(check_TSD(op, opt));
}
BENCHMARK(BM_TSDStreamed)->Arg(4)->Arg(9)->Unit(benchmark::kMillisecond);

void BM_ThetaDoubled(benchmark::State& state) {
  const auto h = group(static_cast<std::size_t>(state.range(0)));
  const auto T = std::make_shared<const TensorMap>(build_heap_T(h));
  for (auto _ : state) benchmark::DoNotOptimize(build_theta_doubled(h, T));
}
BENCHMARK(BM_ThetaDoubled)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_DiagramTheta(benchmark::State& state) {
  const auto f = build_frobenius(group(static_cast<std::size_t>(state.range(0))));
  const auto t = build_twist(f);
  const auto ctx = DiagramContext::from(f, &t, "bench");
  auto expr = parse_diagram("(id^2 * cap) ; (id^3 * cap * id) ; (beta * id^2) ; (id^3 * cup * id) ; (id^2 * cup)");
  arity_check(expr);
  for (auto _ : state) benchmark::DoNotOptimize(evaluate(expr, ctx));
}
BENCHMARK(BM_DiagramTheta)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
