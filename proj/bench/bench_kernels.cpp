// Serial reference kernels vs their OpenMP versions on the larger fixtures.

#include "plumbhf/char_lattice.hpp"
#include "plumbhf/family.hpp"
#include "plumbhf/full_paths.hpp"
#include "plumbhf/ladder.hpp"

#include <benchmark/benchmark.h>

#include <map>
#include <string>

using namespace plumbhf;

namespace {

// 0: Seifert star, 1: family n=3, 2: family n=4
const PlumbingGraph& graph(int which) {
    static const std::map<int, PlumbingGraph> graphs{
        {0, star_graph(-4, {{-2}, {-2}, {-2}, {-2}, {-2}, {-2}, {-3}})},
        {1, family_graph(3)},
        {2, family_graph(4)},
    };
    return graphs.at(which);
}

const IntersectionForm& form(int which) {
    static std::map<int, IntersectionForm> forms;
    auto it = forms.find(which);
    if (it == forms.end()) it = forms.emplace(which, IntersectionForm(graph(which))).first;
    return it->second;
}

const GoodVectorSet& gvs(int which) {
    static std::map<int, GoodVectorSet> sets;
    auto it = sets.find(which);
    if (it == sets.end()) it = sets.emplace(which, good_vectors(form(which))).first;
    return it->second;
}

void BM_InitialCandidates(benchmark::State& st) {
    const auto& f = form(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(initial_candidates(f));
}
void BM_InitialCandidatesSerial(benchmark::State& st) {
    const auto& f = form(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(serial::initial_candidates(f));
}

void BM_Classify(benchmark::State& st) {
    const auto& f = form(static_cast<int>(st.range(0)));
    auto c = initial_candidates(f);
    for (auto _ : st) benchmark::DoNotOptimize(classify_candidates(c, f));
}
void BM_ClassifySerial(benchmark::State& st) {
    const auto& f = form(static_cast<int>(st.range(0)));
    auto c = initial_candidates(f);
    for (auto _ : st) benchmark::DoNotOptimize(serial::classify_candidates(c, f));
}

void BM_SpincKeys(benchmark::State& st) {
    const auto& f = form(static_cast<int>(st.range(0)));
    auto c = initial_candidates(f);
    for (auto _ : st) benchmark::DoNotOptimize(spinc_keys(c, f));
}
void BM_SpincKeysSerial(benchmark::State& st) {
    const auto& f = form(static_cast<int>(st.range(0)));
    auto c = initial_candidates(f);
    for (auto _ : st) benchmark::DoNotOptimize(serial::spinc_keys(c, f));
}

// family graphs have a single spin^c class carrying all generators
void BM_Ladder(benchmark::State& st) {
    const int w = static_cast<int>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(compute_ladder(gvs(w), 0, form(w)));
}
void BM_LadderSerial(benchmark::State& st) {
    const int w = static_cast<int>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(serial::compute_ladder(gvs(w), 0, form(w)));
}

}  // namespace

BENCHMARK(BM_InitialCandidates)->Arg(0)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_InitialCandidatesSerial)->Arg(0)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Classify)->Arg(0)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClassifySerial)->Arg(0)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SpincKeys)->Arg(0)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SpincKeysSerial)->Arg(0)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Ladder)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LadderSerial)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
