#include <boxnet/box_expr.hpp>
#include <boxnet/reduce.hpp>
#include <boxnet/translate.hpp>

#include <benchmark/benchmark.h>

namespace {

const char* kSeqOfChoice = "(a||b);((c||d)[](e||f))";
const char* kIteration = "[ (a||b) * (c||d);e * (f||g) ]";

void BM_BoxNetBurst(benchmark::State& state) {
  auto e = boxnet::burst_family(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(boxnet::box_net(e));
}
BENCHMARK(BM_BoxNetBurst)->DenseRange(2, 10, 2);

void BM_ReduceBurst(benchmark::State& state) {
  auto e = boxnet::burst_family(static_cast<std::size_t>(state.range(0)));
  boxnet::ReduceOptions o;
  o.solver = static_cast<boxnet::Solver>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(boxnet::reduce(e, o));
}
BENCHMARK(BM_ReduceBurst)
    ->ArgsProduct({{2, 4, 6, 8, 10},
                   {static_cast<long>(boxnet::Solver::Trivial), static_cast<long>(boxnet::Solver::Greedy)}});

void BM_ReduceExact(benchmark::State& state) {
  auto e = boxnet::parse_box(state.range(0) == 0 ? kSeqOfChoice : kIteration);
  boxnet::ReduceOptions o;
  o.solver = boxnet::Solver::Exact;
  for (auto _ : state) benchmark::DoNotOptimize(boxnet::reduce(e, o));
}
BENCHMARK(BM_ReduceExact)->Arg(0)->Arg(1);

void BM_VerifyBurstWitness(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  auto standard = boxnet::box_net(boxnet::burst_family(n));
  auto witness = boxnet::net_from_cover(boxnet::burst_witness_cover(n), true);
  for (auto _ : state) benchmark::DoNotOptimize(boxnet::rg_isomorphic(standard, witness));
}
BENCHMARK(BM_VerifyBurstWitness)->Arg(4)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
