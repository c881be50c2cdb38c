#include <benchmark/benchmark.h>

#include <algorithm>

#include "hvlab/fundamental.hpp"
#include "hvlab/generator.hpp"
#include "hvlab/predicates.hpp"

using namespace hvlab;

namespace {

std::vector<HvModule> sample(std::size_t max_m)
{
    GenConfig cfg;
    cfg.seed = 2024;
    cfg.budget = 64;
    cfg.max_module_size = max_m;
    return generate_hv_modules(cfg);
}

std::vector<Rational01> ninths_with(std::int64_t extra)
{
    auto v = GenConfig::ninths();
    for (std::int64_t k = 1; k < extra; ++k) {
        v.push_back(Rational01::make(k, extra));
    }
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

} // namespace

static void BM_NormClosureValidation(benchmark::State& state)
{
    const auto values = ninths_with(state.range(0));
    const auto t = ScalarNorm::minimum();
    for (auto _ : state) {
        benchmark::DoNotOptimize(validate_idempotent_norm(t, values));
    }
    state.SetLabel(std::to_string(values.size()) + " values");
}
BENCHMARK(BM_NormClosureValidation)->Arg(2)->Arg(7)->Arg(16);

static void BM_HvModuleCheck(benchmark::State& state)
{
    const auto ms = sample(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        for (const auto& m : ms) {
            benchmark::DoNotOptimize(check_hv_module(m));
        }
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * ms.size()));
}
BENCHMARK(BM_HvModuleCheck)->DenseRange(2, 5);

static void BM_StPredicate(benchmark::State& state)
{
    const auto ms = sample(static_cast<std::size_t>(state.range(0)));
    const auto norms = IntervalNormPair::min_max();
    std::vector<std::pair<const HvModule*, Ivifs>> cases;
    GenConfig cfg;
    cfg.budget = 4;
    for (const auto& m : ms) {
        for (auto& a : generate_ivifs(m, cfg, IvifsTarget::Layered)) {
            cases.emplace_back(&m, std::move(a));
        }
    }
    for (auto _ : state) {
        for (const auto& [m, a] : cases) {
            benchmark::DoNotOptimize(check_st_hv_submodule(*m, a, norms));
        }
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * cases.size()));
}
BENCHMARK(BM_StPredicate)->DenseRange(2, 5);

static void BM_CutCharacterization(benchmark::State& state)
{
    const auto ms = sample(static_cast<std::size_t>(state.range(0)));
    const auto norms = IntervalNormPair::min_max();
    GenConfig cfg;
    cfg.budget = 2;
    std::vector<std::pair<const HvModule*, Ivifs>> cases;
    for (const auto& m : ms) {
        for (auto& a : generate_ivifs(m, cfg, IvifsTarget::Unconstrained)) {
            cases.emplace_back(&m, std::move(a));
        }
    }
    for (auto _ : state) {
        for (const auto& [m, a] : cases) {
            benchmark::DoNotOptimize(verify_cut_characterization(*m, a, norms));
        }
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * cases.size()));
}
BENCHMARK(BM_CutCharacterization)->DenseRange(2, 4);

static void BM_FundamentalQuotient(benchmark::State& state)
{
    const auto ms = sample(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        for (const auto& m : ms) {
            benchmark::DoNotOptimize(build_fundamental_quotient(m));
        }
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * ms.size()));
}
BENCHMARK(BM_FundamentalQuotient)->DenseRange(2, 5);
BENCHMARK_MAIN();
