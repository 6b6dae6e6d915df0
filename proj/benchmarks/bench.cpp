#include <benchmark/benchmark.h>

#include <random>

#include "cayrec/checks.hpp"
#include "cayrec/group.hpp"
#include "cayrec/oracle.hpp"
#include "cayrec/prop3.hpp"
#include "cayrec/rand.hpp"
#include "cayrec/reconstruct.hpp"

namespace {

using namespace cayrec;

Matrix catalog_matrix(const char* spec) {
    const GroupTable g = make_group(spec);
    const Enumeration e = Enumeration::identity(g.order());
    return cayley_matrix_of(g, e, e);
}

std::vector<Cell> fixed_holes(int n, int k) {
    std::mt19937_64 rng(17);
    std::vector<int> flat(static_cast<std::size_t>(n) * n);
    for (std::size_t i = 0; i < flat.size(); ++i) flat[i] = static_cast<int>(i);
    shuffle(flat, rng);
    std::vector<Cell> cells;
    for (int i = 0; i < k; ++i) cells.push_back({flat[i] / n, flat[i] % n});
    return cells;
}

const char* spec_for_order(int n) {
    switch (n) {
        case 5: return "c5";
        case 8: return "q8";
        case 16: return "prod:c2,c8";
        case 24: return "s4";
        default: return "c8";
    }
}

void BM_FindFill(benchmark::State& state) {
    const Matrix m = catalog_matrix("c8");
    const auto holes = fixed_holes(8, 7);
    const PartialMatrix p = punch(m, holes);
    for (auto _ : state) {
        benchmark::DoNotOptimize(find_fill(p, holes[0]));
    }
}
BENCHMARK(BM_FindFill);

void BM_Reconstruct(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Matrix m = catalog_matrix(spec_for_order(n));
    const auto holes = fixed_holes(n, n - 1);
    const PartialMatrix p = punch(m, holes);
    for (auto _ : state) {
        benchmark::DoNotOptimize(reconstruct(p, holes, ReconstructionMode::kQuadrangleOnly));
    }
}
BENCHMARK(BM_Reconstruct)->Arg(5)->Arg(8)->Arg(16)->Arg(24);

void BM_CheckQuadrangleCriterion(benchmark::State& state) {
    const Matrix m = catalog_matrix(spec_for_order(static_cast<int>(state.range(0))));
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_quadrangle_criterion(m));
    }
}
BENCHMARK(BM_CheckQuadrangleCriterion)->Arg(8)->Arg(16)->Arg(24);

void BM_IsCayley(benchmark::State& state) {
    const Matrix m = catalog_matrix(spec_for_order(static_cast<int>(state.range(0))));
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_cayley(m));
    }
}
BENCHMARK(BM_IsCayley)->Arg(8)->Arg(16)->Arg(24);

void BM_OracleCayleyCompletion(benchmark::State& state) {
    const Matrix m = catalog_matrix("c5");
    CompletionQuery q(punch(m, fixed_holes(5, 4)));
    q.mode = CompletionMode::kCayley;
    for (auto _ : state) {
        benchmark::DoNotOptimize(complete_all(q));
    }
}
BENCHMARK(BM_OracleCayleyCompletion);

void BM_Prop3Witness(benchmark::State& state) {
    const GroupTable g = make_group("c8");
    const std::vector<ElementPair> t = {{7, 7}, {0, 3}, {2, 6}, {5, 1}, {4, 4}, {1, 0}, {6, 2}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(prop3_witness(g, t, {7, 7}));
    }
}
BENCHMARK(BM_Prop3Witness);

}  // namespace

BENCHMARK_MAIN();
