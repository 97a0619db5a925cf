#include <benchmark/benchmark.h>

#include <matchbox/classify.hpp>
#include <matchbox/matrix.hpp>
#include <matchbox/odometer.hpp>
#include <matchbox/pseudogroup.hpp>
#include <matchbox/supernatural.hpp>
#include <matchbox/toral.hpp>

#include <vector>

using namespace matchbox;

namespace {

void BM_Characteristic(benchmark::State& state) {
    const BondingSequence seq({12, 35, 143, 221}, {6, 10, 15, 21, 22});
    for (auto _ : state) {
        benchmark::DoNotOptimize(characteristic(seq));
    }
}
BENCHMARK(BM_Characteristic);

void BM_Orbit(benchmark::State& state) {
    const TowerRef tower =
        make_tower(BondingSequence({}, {2, 3}), static_cast<int>(state.range(0)));
    const TowerPoint origin(tower, 0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(orbit(origin));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Orbit)->DenseRange(2, 8, 2);

void BM_Canonicalize(benchmark::State& state) {
    const TowerRef tower = make_tower(BondingSequence({}, {2, 3}), 6);
    // one full congruence class mod 2, written out at the deepest level (M_6 = 216)
    std::vector<Int> residues;
    for (long r = 0; r < 216; r += 2) {
        residues.push_back(r);
    }
    const ClopenSet window(tower, 6, residues);
    for (auto _ : state) {
        benchmark::DoNotOptimize(window.canonicalize());
    }
}
BENCHMARK(BM_Canonicalize);

void BM_IsCollapsible(benchmark::State& state) {
    const TowerRef tower = make_tower(BondingSequence({}, {2, 3, 2}), 3);
    std::vector<Int> residues;
    for (long r = 0; r < 12; r += 3) {
        residues.push_back(r);
    }
    const ClopenSet window(tower, 3, residues);
    for (auto _ : state) {
        RestrictedAction action(window);
        benchmark::DoNotOptimize(action.is_collapsible());
    }
}
BENCHMARK(BM_IsCollapsible);

void BM_SmithNormalForm(benchmark::State& state) {
    const IntMatrix m = IntMatrix::from_rows({{6, 4, 2, 0, -3},
                                              {4, 8, 10, -2, 1},
                                              {2, 10, 12, 6, 5},
                                              {0, -2, 6, 9, 7},
                                              {-3, 1, 5, 7, 11}});
    for (auto _ : state) {
        benchmark::DoNotOptimize(smith_normal_form(m));
    }
}
BENCHMARK(BM_SmithNormalForm);

void BM_KernelLattice(benchmark::State& state) {
    const MatrixChain chain(2, {}, {IntMatrix::from_rows({{2, 1}, {0, 2}})});
    const int depth = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernel_lattice_at_depth(chain, depth));
    }
}
BENCHMARK(BM_KernelLattice)->DenseRange(4, 16, 4);

void BM_ClassifyVietoris(benchmark::State& state) {
    const BondingSequence a({12, 35}, {6, 10, 15});
    const BondingSequence b({8}, {30, 30, 30});
    for (auto _ : state) {
        benchmark::DoNotOptimize(classify_vietoris(a, b));
    }
}
BENCHMARK(BM_ClassifyVietoris);

}  // namespace

BENCHMARK_MAIN();
