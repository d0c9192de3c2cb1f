#include <benchmark/benchmark.h>

#include <random>

#include "slw/fourier.hpp"
#include "slw/iwasawa.hpp"
#include "slw/special_functions.hpp"
#include "slw/whittaker.hpp"

namespace {

slw::DMatrix sample_g() {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> xd(-0.3, 0.3), yd(0.8, 1.4);
    slw::DMatrix n = slw::DMatrix::identity(5);
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = i + 1; j < 5; ++j) n(i, j) = xd(rng);
    slw::DMatrix a(5, 5);
    double prev = 1.0;
    double ys[4];
    for (auto& y : ys) y = yd(rng);
    for (std::size_t i = 0; i < 4; ++i) {
        a(i, i) = ys[i] / prev;
        prev = ys[i];
    }
    a(4, 4) = 1.0 / prev;
    return n * a;
}

void BesselK(benchmark::State& state) {
    double nu = 0.75, x = 2.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(slw::sf::bessel_k(nu, x));
        x = x < 50.0 ? x + 0.1 : 0.3;
    }
}
BENCHMARK(BesselK);

void RealIwasawaSL5(benchmark::State& state) {
    const slw::DMatrix g = sample_g();
    for (auto _ : state) benchmark::DoNotOptimize(slw::iwasawa::real_iwasawa(g));
}
BENCHMARK(RealIwasawaSL5);

void ReductionTableNtm(benchmark::State& state) {
    const slw::Weight lam = slw::Weight::eisenstein(5, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(slw::whittaker::reduction_terms(5, lam, {1, 4}));
}
BENCHMARK(ReductionTableNtm);

void WhittakerEvalTranslate(benchmark::State& state) {
    const slw::DMatrix g = sample_g();
    const slw::Weight lam = slw::Weight::eisenstein(5, 2);
    slw::QMatrix l = slw::QMatrix::identity(5);
    l(0, 0) = 6;
    l(4, 4) = slw::Rational(1, 6);
    for (auto _ : state)
        benchmark::DoNotOptimize(slw::whittaker::evaluate_whittaker(
            5, lam, {1, 4}, {{1, slw::Int(1)}, {4, slw::Int(1)}}, l, g, 1.3));
}
BENCHMARK(WhittakerEvalTranslate);

} // namespace

BENCHMARK_MAIN();
