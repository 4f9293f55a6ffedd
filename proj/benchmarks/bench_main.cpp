// Microbenchmarks for the hot paths: word enumeration over composition
// images, clopen-set normalization, and the covering decision.

#include "uifs/verify.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

using namespace uifs;

void BM_CompositionEnumeration(benchmark::State& state) {
    const int depth = static_cast<int>(state.range(0));
    const DvrContext ctx(2, CharMode::EqualChar, 16);
    const Ifs system = Ifs::full_digit_prepend(ctx);
    for (auto _ : state) {
        auto check = verify_composition_identity(system, depth);
        benchmark::DoNotOptimize(check.ok);
    }
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << depth));
}
BENCHMARK(BM_CompositionEnumeration)->Arg(6)->Arg(8)->Arg(10);

void BM_NormalizeBalls(benchmark::State& state) {
    const DvrContext ctx(2, CharMode::EqualChar, 10);
    const Ball ring(Element::zero(ctx), 0);
    std::vector<Ball> pool = coset_decompose(ring, 6);
    std::mt19937_64 rng(11);
    std::vector<Ball> sample;
    for (int i = 0; i < static_cast<int>(state.range(0)); ++i) {
        sample.push_back(pool[rng() % pool.size()]);
    }
    for (auto _ : state) {
        auto set = ClopenSet::normalize(sample);
        benchmark::DoNotOptimize(set.is_empty());
    }
}
BENCHMARK(BM_NormalizeBalls)->Arg(16)->Arg(64);

void BM_VerifySc(benchmark::State& state) {
    const DvrContext ctx(2, CharMode::EqualChar, 12);
    const Ifs system = Ifs::full_digit_prepend(ctx);
    const Ball ring(Element::zero(ctx), 0);
    std::vector<ClopenSet> sets;
    for (const Ball& b : coset_decompose(ring, static_cast<int>(state.range(0)))) {
        sets.push_back(ClopenSet::of(b));
    }
    const Covering covering(std::move(sets), ring);
    for (auto _ : state) {
        auto report = verify_sc(system, covering);
        benchmark::DoNotOptimize(report.verdict);
    }
}
BENCHMARK(BM_VerifySc)->Arg(4)->Arg(8);

} // namespace

BENCHMARK_MAIN();
