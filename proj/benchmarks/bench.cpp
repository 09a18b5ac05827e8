#include <benchmark/benchmark.h>

#include "bv/counterexample.hpp"
#include "bv/fixtures.hpp"
#include "bv/prover.hpp"
#include "bv/structure.hpp"
#include "bv/web.hpp"

namespace {

void BM_Parse(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(bv::parse(bv::fixtures::kS0Text));
  }
}
BENCHMARK(BM_Parse);

void BM_Canonicalize(benchmark::State& state) {
  // a deliberately messy equivalent presentation
  const char* noisy = "[o,[<~a;[o,~c,~b]>,o],<[[b],a,o];c>]";
  for (auto _ : state) {
    benchmark::DoNotOptimize(bv::parse(noisy));
  }
}
BENCHMARK(BM_Canonicalize);

void BM_WebOf(benchmark::State& state) {
  bv::Structure s = bv::sn(static_cast<int>(state.range(0))).structure;
  for (auto _ : state) {
    benchmark::DoNotOptimize(bv::webOf(s));
  }
}
BENCHMARK(BM_WebOf)->Arg(0)->Arg(2)->Arg(4);

void BM_Reconstruct(benchmark::State& state) {
  bv::RelationWeb w =
      bv::webOf(bv::sn(static_cast<int>(state.range(0))).structure);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bv::reconstruct(w));
  }
}
BENCHMARK(BM_Reconstruct)->Arg(0)->Arg(2);

void BM_Expand(benchmark::State& state) {
  bv::Structure s = bv::parse(bv::fixtures::kS0Text);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bv::expand(s));
  }
}
BENCHMARK(BM_Expand);

void BM_ProveS0(benchmark::State& state) {
  bv::Structure s = bv::parse(bv::fixtures::kS0Text);
  for (auto _ : state) {
    // fresh prover each round so the verdict cache does not short-circuit
    bv::Prover p;
    benchmark::DoNotOptimize(p.prove(s));
  }
}
BENCHMARK(BM_ProveS0)->Unit(benchmark::kMillisecond);

void BM_ProofOfSn(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(bv::proofOfSn(n));
  }
}
BENCHMARK(BM_ProofOfSn)->Arg(1)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
