#include <benchmark/benchmark.h>

#include "njconst/closed_forms.hpp"
#include "njconst/constants.hpp"
#include "njconst/lemma_audit.hpp"

namespace {

njconst::SearchConfig config_for(int angles) {
    njconst::SearchConfig c;
    c.coarse_angles = angles;
    c.t_samples = angles / 4 + 1;
    c.workers = 1;
    return c;
}

void BM_SkewSphere(benchmark::State& state) {
    const auto config = config_for(static_cast<int>(state.range(0)));
    std::uint64_t evals = 0;
    for (auto _ : state) {
        const auto e = njconst::estimate_skew(njconst::BanasFraczek{2}, 3, 1, 2, config);
        benchmark::DoNotOptimize(e.value);
        evals = e.evaluations;
    }
    state.counters["evaluations"] = static_cast<double>(evals);
}
BENCHMARK(BM_SkewSphere)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_SkewExtreme(benchmark::State& state) {
    const auto config = config_for(static_cast<int>(state.range(0)));
    std::uint64_t evals = 0;
    for (auto _ : state) {
        const auto e = njconst::estimate_skew_extreme_bf(2, 3, 1, 2, config);
        benchmark::DoNotOptimize(e.value);
        evals = e.evaluations;
    }
    state.counters["evaluations"] = static_cast<double>(evals);
}
BENCHMARK(BM_SkewExtreme)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_CnjNonIntegerExponentSpace(benchmark::State& state) {
    const auto config = config_for(128);
    for (auto _ : state) {
        benchmark::DoNotOptimize(njconst::estimate_skew(njconst::GeneralizedBF{2, 1.5}, 2.5, 1, 1, config).value);
    }
}
BENCHMARK(BM_CnjNonIntegerExponentSpace)->Unit(benchmark::kMillisecond);

void BM_LemmaTwoAudit(benchmark::State& state) {
    const int resolution = static_cast<int>(state.range(0));
    for (auto _ : state) {
        const njconst::AuditGrid grid{resolution, 2, 3, 1, 2, 51};
        benchmark::DoNotOptimize(njconst::audit_lemma2(grid).min_slack);
    }
}
BENCHMARK(BM_LemmaTwoAudit)->Arg(51)->Arg(201)->Unit(benchmark::kMillisecond);

void BM_ClosedForm(benchmark::State& state) {
    double lambda = 2;
    for (auto _ : state) {
        benchmark::DoNotOptimize(njconst::cf_skew_bf(lambda, 3.5, 1, 2).value);
        lambda = lambda < 9 ? lambda + 0.001 : 2;
    }
}
BENCHMARK(BM_ClosedForm);

}  // namespace

BENCHMARK_MAIN();
