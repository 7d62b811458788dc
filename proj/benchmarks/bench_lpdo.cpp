#include <benchmark/benchmark.h>

#include "lpdo/lpdo.hpp"
#include "support/random_ops.hpp"

using namespace lpdo;

namespace {

const char *kExample1 = "(Dx + Dy + x) * (Dx*Dy + y*Dx + y^2*Dy + y^3)";

void BM_RatFuncGcd(benchmark::State &state) {
    lpdo::testing::RandomOps r(1);
    const unsigned deg = static_cast<unsigned>(state.range(0));
    const BivarPoly common = r.nonzero_poly(deg, 0.7);
    const BivarPoly a = r.nonzero_poly(deg, 0.7) * common, b = r.nonzero_poly(deg, 0.7) * common;
    for (auto _ : state)
        benchmark::DoNotOptimize(gcd(a, b));
}
BENCHMARK(BM_RatFuncGcd)->DenseRange(1, 4);

void BM_Compose(benchmark::State &state) {
    lpdo::testing::RandomOps r(2);
    const unsigned ord = static_cast<unsigned>(state.range(0));
    const Lpdo A = r.rat_op(ord), B = r.rat_op(ord);
    for (auto _ : state)
        benchmark::DoNotOptimize(compose(A, B));
}
BENCHMARK(BM_Compose)->DenseRange(1, 3);

void BM_RightDivide(benchmark::State &state) {
    const Lpdo L = parse_operator(kExample1), F = parse_operator("Dy + y");
    for (auto _ : state)
        benchmark::DoNotOptimize(right_divide(L, F));
}
BENCHMARK(BM_RightDivide);

void BM_Invariants(benchmark::State &state) {
    const Lpdo L = normalize_form1(parse_operator(kExample1));
    for (auto _ : state)
        benchmark::DoNotOptimize(compute_invariants(L));
}
BENCHMARK(BM_Invariants);

void BM_InvariantsGauged(benchmark::State &state) {
    const Lpdo L = gauge(normalize_form1(parse_operator(kExample1)), parse_function("x*y + 1"));
    for (auto _ : state)
        benchmark::DoNotOptimize(compute_invariants(L));
}
BENCHMARK(BM_InvariantsGauged);

void BM_TypeSweep(benchmark::State &state) {
    const InvariantSet inv = compute_invariants(normalize_form1(parse_operator(kExample1)));
    for (auto _ : state)
        benchmark::DoNotOptimize(condition_sweep(inv));
}
BENCHMARK(BM_TypeSweep);

void BM_Triple(benchmark::State &state) {
    const Lpdo L = parse_operator(kExample1), F1 = parse_operator("Dx + Dy + x"), F2 = parse_operator("Dy + y");
    for (auto _ : state)
        benchmark::DoNotOptimize(construct_triple(L, F1, F2));
}
BENCHMARK(BM_Triple);

void BM_Parse(benchmark::State &state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(parse_operator(kExample1));
}
BENCHMARK(BM_Parse);

} // namespace

BENCHMARK_MAIN();
