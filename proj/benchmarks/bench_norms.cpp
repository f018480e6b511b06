#include "ho/circle.hpp"
#include "ho/factor.hpp"
#include "ho/growth.hpp"
#include "ho/hardy.hpp"

#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

namespace {

ho::BoundaryFunction smooth_sample(int n)
{
    std::vector<std::pair<int, ho::cplx>> modes{{0, 1.0}, {1, 0.5}, {-3, ho::cplx(0.0, 0.25)}, {7, 0.125}};
    return ho::BoundaryFunction::from_modes(modes, n);
}

void BM_LuxemburgPowerClosedForm(benchmark::State& state)
{
    const auto g = smooth_sample(static_cast<int>(state.range(0)));
    const auto f = ho::GrowthFunction::power(3.0);
    for (auto _ : state) benchmark::DoNotOptimize(ho::luxemburg_norm(g, f).value);
}
BENCHMARK(BM_LuxemburgPowerClosedForm)->RangeMultiplier(4)->Range(256, 16384);

void BM_LuxemburgPowerIterated(benchmark::State& state)
{
    const auto g = smooth_sample(static_cast<int>(state.range(0)));
    const auto f = ho::GrowthFunction::power(3.0);
    ho::LuxemburgOptions opt;
    opt.closed_form = false;
    for (auto _ : state) benchmark::DoNotOptimize(ho::luxemburg_norm(g, f, opt).value);
}
BENCHMARK(BM_LuxemburgPowerIterated)->RangeMultiplier(4)->Range(256, 16384);

void BM_LuxemburgExp(benchmark::State& state)
{
    const auto g = smooth_sample(static_cast<int>(state.range(0)));
    const auto f = ho::GrowthFunction::exp_minus_one();
    for (auto _ : state) benchmark::DoNotOptimize(ho::luxemburg_norm(g, f).value);
}
BENCHMARK(BM_LuxemburgExp)->RangeMultiplier(4)->Range(256, 16384);

void BM_OuterFromModulus(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const ho::AnalyticFunction o({2.0, 1.0, ho::cplx(0.0, 0.3)});
    const auto m = ho::BoundaryFunction::from_real_samples(ho::circle_restriction(o, 1.0, n).magnitudes());
    for (auto _ : state) benchmark::DoNotOptimize(ho::outer_from_modulus(m).outer.size());
}
BENCHMARK(BM_OuterFromModulus)->RangeMultiplier(4)->Range(256, 16384);

}  // namespace
