// Serial vs OpenMP kernels. Thread count follows AINFTY_THREADS / OMP_NUM_THREADS.
#include "ainf/fixtures.hpp"
#include "ainf/hochschild.hpp"

#include <benchmark/benchmark.h>
#include <omp.h>

using namespace ainf;

namespace {

const Structure& fixture(const char* name) {
    static std::map<std::string, Structure> cache;
    auto it = cache.find(name);
    if (it == cache.end()) it = cache.emplace(name, build_fixture(name)).first;
    return it->second;
}

// arg 0: serial, 1: parallel
void BM_AssembleComplex(benchmark::State& st) {
    const auto& s = fixture("exterior2");
    HochschildChainComplex H(s.diagonal, 4);
    const bool par = st.range(0) != 0;
    for (auto _ : st) benchmark::DoNotOptimize(H.complex(par));
    st.SetLabel(par ? "parallel" : "serial");
}
BENCHMARK(BM_AssembleComplex)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

// The equation checks have no serial flag; one OpenMP thread is the serial run.
template <class F>
void with_threads(benchmark::State& st, F&& f) {
    const int saved = omp_get_max_threads();
    if (st.range(0) == 0) omp_set_num_threads(1);
    for (auto _ : st) f();
    omp_set_num_threads(saved);
    st.SetLabel(st.range(0) ? "parallel" : "serial");
}

void BM_DefiningEquation(benchmark::State& st) {
    const auto& s = fixture("mu3_square_zero");
    with_threads(st, [&] {
        for (int r = 1; r <= 5; ++r) benchmark::DoNotOptimize(check_defining_equation(*s.algebra, r));
    });
}
BENCHMARK(BM_DefiningEquation)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_BimoduleEquation(benchmark::State& st) {
    const auto& s = fixture("exterior2");
    with_threads(st, [&] {
        for (int r = 0; r <= 4; ++r)
            for (int t = 0; r + t <= 4; ++t) benchmark::DoNotOptimize(check_bimodule_equation(*s.diagonal, r, t));
    });
}
BENCHMARK(BM_BimoduleEquation)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
