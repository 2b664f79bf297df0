#include <benchmark/benchmark.h>

#include "lucaszeta/characters.hpp"
#include "lucaszeta/special.hpp"

using namespace lucaszeta;

namespace {

void BM_gauss_sum(benchmark::State& state) {
    long q = state.range(0);
    auto chars = enumerate_characters(q);
    const auto& chi = chars.back();
    for (auto _ : state) {
        Cyclotomic tau = gauss_sum(chi, 1);
        benchmark::DoNotOptimize(tau.is_zero());
    }
}
BENCHMARK(BM_gauss_sum)->Arg(8)->Arg(24)->Arg(60);

void BM_special_value_d3(benchmark::State& state) {
    LucasParams lp = LucasParams::validate(Rational(1), Rational(-1));
    ShiftSpec sh(3, {1, 2, 3});
    NegIntPoint m({3, 3, 3});
    for (auto _ : state) {
        SpecialValueResult r = special_zeta_exact(lp, sh, m);
        benchmark::DoNotOptimize(r.is_rational);
    }
}
BENCHMARK(BM_special_value_d3);

void BM_symmetrized_galois_d3(benchmark::State& state) {
    LucasParams lp = LucasParams::validate(Rational(2), Rational(-1));
    ShiftSpec sh(3, {1, 1, 2});
    NegIntPoint m({1, 1, 1});
    for (auto _ : state) {
        SymmetrizedValue sym = symmetrized_special_zeta(lp, sh, m);
        benchmark::DoNotOptimize(galois_audit(sym.terms, m));
    }
}
BENCHMARK(BM_symmetrized_galois_d3);

void BM_lucas_u_exact(benchmark::State& state) {
    LucasParams lp = LucasParams::validate(Rational(1), Rational(-3));
    long n = state.range(0);
    for (auto _ : state) {
        LucasSequenceCache cache(lp);
        benchmark::DoNotOptimize(cache.u(static_cast<std::size_t>(n)));
    }
}
BENCHMARK(BM_lucas_u_exact)->Arg(500)->Arg(2000);

} // namespace
