// Serial reference loops against the OpenMP kernels on the same inputs.
// Arg 0 runs Execution::serial, arg 1 Execution::parallel.

#include "ssc/attack.hpp"
#include "ssc/data.hpp"
#include "ssc/model.hpp"
#include "ssc/smoothing.hpp"
#include "ssc/train.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace ssc;

struct Fixture {
  SeparableData gen;
  Hypothesis h;
};

const Fixture& fixture() {
  static const Fixture f = [] {
    SeparableConfig cfg;
    cfg.m = 128;
    cfg.seed = 11;
    SeparableData gen = gen_separable_binary(cfg);
    Hypothesis h = gen.hypothesis(cfg.lambda);
    return Fixture{std::move(gen), std::move(h)};
  }();
  return f;
}

Execution mode(const benchmark::State& state) { return state.range(0) == 0 ? Execution::serial : Execution::parallel; }

void set_label(benchmark::State& state) {
  state.SetLabel(state.range(0) == 0 ? "serial" : "parallel x" + std::to_string(max_threads()));
}

void BM_encode_batch(benchmark::State& state) {
  const auto& f = fixture();
  for (auto _ : state) {
    auto codes = encode_batch(f.h.dict, f.gen.data.samples, f.h.lambda, {}, mode(state));
    benchmark::DoNotOptimize(codes.data());
  }
  state.SetItemsProcessed(state.iterations() * f.gen.data.size());
  set_label(state);
}

void BM_certify_dataset(benchmark::State& state) {
  const auto& f = fixture();
  for (auto _ : state) {
    auto certs = certify_dataset(f.h, f.gen.data, {}, mode(state));
    benchmark::DoNotOptimize(certs.data());
  }
  state.SetItemsProcessed(state.iterations() * f.gen.data.size());
  set_label(state);
}

void BM_supervised_loss(benchmark::State& state) {
  const auto& f = fixture();
  for (auto _ : state) {
    auto r = supervised_loss(f.h, f.gen.data, 0.01, 1e-4, 20, mode(state));
    benchmark::DoNotOptimize(r.loss);
  }
  state.SetItemsProcessed(state.iterations() * f.gen.data.size());
  set_label(state);
}

void BM_robust_accuracy(benchmark::State& state) {
  const auto& f = fixture();
  const Dataset part = f.gen.data.slice(0, 32);
  AttackConfig cfg;
  cfg.steps = 10;
  cfg.restarts = 1;
  for (auto _ : state) {
    auto acc = robust_accuracy(f.h, part, {0.02, 0.05}, cfg, mode(state));
    benchmark::DoNotOptimize(acc.data());
  }
  state.SetItemsProcessed(state.iterations() * part.size());
  set_label(state);
}

void BM_smooth_certify(benchmark::State& state) {
  const auto& f = fixture();
  const Dataset part = f.gen.data.slice(0, 8);
  SmoothingConfig cfg;
  cfg.sigma = 0.05;
  cfg.n0 = 16;
  cfg.n = 256;
  for (auto _ : state) {
    auto rec = smooth_certify_dataset(f.h, part, cfg, mode(state));
    benchmark::DoNotOptimize(rec.data());
  }
  state.SetItemsProcessed(state.iterations() * part.size());
  set_label(state);
}

}  // namespace

BENCHMARK(BM_encode_batch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_certify_dataset)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_supervised_loss)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_robust_accuracy)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_smooth_certify)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
