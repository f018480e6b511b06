#include "ho/circle.hpp"
#include "ho/growth.hpp"
#include "ho/hankel.hpp"
#include "ho/hardy.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_BmoRhoNorm(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const auto g = ho::circle_restriction(ho::AnalyticFunction::monomial(5), 1.0, n);
    const auto rho = ho::weight_ratio(ho::GrowthFunction::power(1.0), ho::GrowthFunction::power(2.0));
    for (auto _ : state) benchmark::DoNotOptimize(ho::bmo_rho_norm(g, rho));
}
BENCHMARK(BM_BmoRhoNorm)->RangeMultiplier(4)->Range(256, 4096);

void BM_HankelApply(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const ho::AnalyticFunction b({0.0, 1.0, 0.5, 0.25});
    const ho::AnalyticFunction g({1.0, -0.5, 0.2});
    for (auto _ : state) benchmark::DoNotOptimize(ho::hankel_apply(b, g, n).size());
}
BENCHMARK(BM_HankelApply)->RangeMultiplier(4)->Range(256, 16384);

void BM_HankelNormEstimate(benchmark::State& state)
{
    const ho::AnalyticFunction b = ho::AnalyticFunction::monomial(3);
    const auto f1 = ho::GrowthFunction::power(4.0);
    const auto f2 = ho::GrowthFunction::power(2.0);
    for (auto _ : state) benchmark::DoNotOptimize(ho::hankel_norm_estimate(b, f1, f2, {}, 7, 1024).operator_estimate);
}
BENCHMARK(BM_HankelNormEstimate)->Unit(benchmark::kMillisecond);

void BM_HankelSvd(benchmark::State& state)
{
    std::vector<ho::cplx> c(static_cast<size_t>(state.range(0)));
    for (size_t k = 0; k < c.size(); ++k) c[k] = 1.0 / (1.0 + static_cast<double>(k));
    const auto h = ho::hankel_matrix(ho::AnalyticFunction(c), static_cast<int>(c.size()));
    for (auto _ : state) benchmark::DoNotOptimize(h.largest_singular_value());
}
BENCHMARK(BM_HankelSvd)->RangeMultiplier(2)->Range(16, 256);

}  // namespace
