#include <benchmark/benchmark.h>

#include "lucaszeta/continuation.hpp"
#include "lucaszeta/series.hpp"

using namespace lucaszeta;

namespace {

const LucasParams& fib() {
    static LucasParams p = LucasParams::validate(Rational(1), Rational(-1));
    return p;
}

LucasSequenceCache& fib_cache() {
    static LucasSequenceCache c(fib());
    return c;
}

void BM_direct_shifted_d1(benchmark::State& state) {
    OracleOptions oo;
    oo.prec = state.range(0);
    oo.eps = 1e-20;
    MultiPoint s = MultiPoint::real({2.0}, oo.prec + 32);
    ShiftSpec sh(2, {1});
    for (auto _ : state) {
        EvalResult r = direct_shifted_zeta(fib_cache(), sh, s, oo);
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(BM_direct_shifted_d1)->Arg(128)->Arg(256);

void BM_direct_shifted_d3(benchmark::State& state) {
    OracleOptions oo;
    oo.prec = 128;
    oo.eps = 1e-20;
    MultiPoint s = MultiPoint::real({0.5, 0.75, 1.0}, 192);
    ShiftSpec sh(2, {1, 2, 1});
    for (auto _ : state) {
        EvalResult r = direct_shifted_zeta(fib_cache(), sh, s, oo);
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(BM_direct_shifted_d3);

void BM_continuation_d1(benchmark::State& state) {
    TruncationPolicy pol;
    pol.eps = 1e-20;
    MultiPoint s = MultiPoint::real({-2.5}, 192);
    ShiftSpec sh(2, {1});
    for (auto _ : state) {
        EvalResult r = shifted_zeta_cont(fib(), sh, s, pol, 128);
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(BM_continuation_d1);

void BM_continuation_d3(benchmark::State& state) {
    TruncationPolicy pol;
    pol.eps = 1e-20;
    MultiPoint s = MultiPoint::real({0.5, 0.75, 1.0}, 192);
    ShiftSpec sh(2, {1, 2, 1});
    for (auto _ : state) {
        EvalResult r = shifted_zeta_cont(fib(), sh, s, pol, 128);
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(BM_continuation_d3);

void BM_dirichlet_cont_d2(benchmark::State& state) {
    TruncationPolicy pol;
    pol.eps = 1e-16;
    auto chars = enumerate_characters(3);
    std::vector<DirichletCharacter> tuple{chars[1], chars[1]};
    MultiPoint s = MultiPoint::real({0.8, 1.2}, 192);
    for (auto _ : state) {
        EvalResult r = dirichlet_L_cont(fib(), tuple, s, pol, 128);
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(BM_dirichlet_cont_d2);

} // namespace
