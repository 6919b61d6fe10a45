#include "chev/automorphisms.hpp"
#include "chev/replay.hpp"
#include "chev/steinberg.hpp"

#include <benchmark/benchmark.h>

using namespace chev;

namespace {

SystemType system_arg(const benchmark::State& s) { return s.range(0) == 0 ? SystemType::B2 : SystemType::G2; }

void BM_RootElementZLoc(benchmark::State& state)
{
    ZLoc r(5);
    ChevalleyGroup<ZLoc> g(r, system_arg(state));
    const auto& roots = g.system().roots();
    std::size_t k = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(g.x(roots[k % roots.size()], mpq_class(3, 7)));
        ++k;
    }
}
BENCHMARK(BM_RootElementZLoc)->Arg(0)->Arg(1);

template <class R>
void steinberg_bench(benchmark::State& state, const R& r)
{
    auto t = system_arg(state);
    Rng rng(1);
    auto c2 = commutator_constants(t, 2, rng).table;
    auto c5 = reflection_signs(t);
    ChevalleyGroup<R> g(r, t);
    for (auto _ : state)
        benchmark::DoNotOptimize(check_steinberg(g, 1, rng, c2, c5));
}

void BM_SteinbergZMod25(benchmark::State& state) { steinberg_bench(state, ZModPk(5, 2)); }
void BM_SteinbergZLoc5(benchmark::State& state) { steinberg_bench(state, ZLoc(5)); }
void BM_SteinbergDual5(benchmark::State& state) { steinberg_bench(state, Dual(5)); }
BENCHMARK(BM_SteinbergZMod25)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SteinbergZLoc5)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SteinbergDual5)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_CommutatorConstants(benchmark::State& state)
{
    Rng rng(2);
    for (auto _ : state)
        benchmark::DoNotOptimize(commutator_constants(system_arg(state), 1, rng));
}
BENCHMARK(BM_CommutatorConstants)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_TorusCommutant(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(torus_commutant_shape(7, system_arg(state)));
}
BENCHMARK(BM_TorusCommutant)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_LinearSystem76(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(linear_system_76());
}
BENCHMARK(BM_LinearSystem76)->Unit(benchmark::kMillisecond);

void BM_Lemma2Search(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(lemma2_search());
}
BENCHMARK(BM_Lemma2Search)->Unit(benchmark::kMillisecond);

void BM_Det76Bareiss(benchmark::State& state)
{
    auto ls = linear_system_76();
    IntMatrix m;
    for (const auto& row : ls.matrix) {
        std::vector<mpz_class> r;
        for (const auto& v : row)
            r.push_back(v.get_num());
        m.push_back(std::move(r));
    }
    for (auto _ : state)
        benchmark::DoNotOptimize(bareiss_det(m));
}
BENCHMARK(BM_Det76Bareiss)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
