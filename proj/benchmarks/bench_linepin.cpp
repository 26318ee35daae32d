#include "linepin/classify.hpp"
#include "linepin/generators.hpp"
#include "linepin/oracle.hpp"
#include "linepin/pinning.hpp"
#include "linepin/polytopes.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace linepin;

static void BM_DecideFixture(benchmark::State& st) {
    auto names = std::vector<std::string>{"ortho8", "six_k1", "six_k2", "six_k3", "tangent_4pinning", "quadric_4block"};
    auto F = generate(names[static_cast<std::size_t>(st.range(0))]).constraints;
    for (auto _ : st) benchmark::DoNotOptimize(decide_pinning(F));
    st.SetLabel(names[static_cast<std::size_t>(st.range(0))]);
}
BENCHMARK(BM_DecideFixture)->DenseRange(0, 5);

static void BM_DoubleDescription(benchmark::State& st) {
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<int> c(-5, 5);
    const int d = 5;
    std::vector<Vec> H;
    for (int i = 0; i < st.range(0); ++i) {
        Vec a(d);
        for (auto& x : a) x = c(rng);
        H.push_back(a);
    }
    for (auto _ : st) benchmark::DoNotOptimize(cone_from_halfspaces(H, d));
}
BENCHMARK(BM_DoubleDescription)->Arg(4)->Arg(8)->Arg(12)->Arg(16);

static void BM_MinimizeOrtho8(benchmark::State& st) {
    auto F = gen_ortho8().constraints;
    for (auto _ : st) benchmark::DoNotOptimize(minimize_pinning(F));
}
BENCHMARK(BM_MinimizeOrtho8);

static void BM_ClassifyOrtho(benchmark::State& st) {
    auto F = gen_char_ortho(OrthoClass::C7).constraints;
    for (auto _ : st) benchmark::DoNotOptimize(classify_ortho_pinning(F));
}
BENCHMARK(BM_ClassifyOrtho);

static void BM_InfinitePolytopes(benchmark::State& st) {
    auto fam = gen_infinite(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(decide_polytope_pinning(fam.polytopes));
}
BENCHMARK(BM_InfinitePolytopes)->Arg(3)->Arg(5)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_Oracle(benchmark::State& st) {
    auto F = gen_six_k1().constraints;
    for (auto _ : st) benchmark::DoNotOptimize(sample_escape(F));
}
BENCHMARK(BM_Oracle)->Unit(benchmark::kMillisecond);

static void BM_Steinitz(benchmark::State& st) {
    Mat X;
    const int d = static_cast<int>(st.range(0));
    for (int i = 0; i < d; ++i) {
        X.push_back(unit(d, i));
        X.push_back(neg(unit(d, i)));
        Vec m(d, Rat(1));
        m[static_cast<std::size_t>(i)] = -2;
        X.push_back(m);
    }
    for (auto _ : st) benchmark::DoNotOptimize(steinitz_reduce(X, d));
}
BENCHMARK(BM_Steinitz)->DenseRange(2, 5);

BENCHMARK_MAIN();
