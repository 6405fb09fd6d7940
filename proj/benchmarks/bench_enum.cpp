#include <benchmark/benchmark.h>

#include "qmds/puncture.hpp"
#include "qmds/table1.hpp"

using namespace qmds;

namespace {

void BM_FieldMul(benchmark::State& state) {
    FieldPtr f = field_of_order(static_cast<int>(state.range(0)));
    const int q = f->q();
    felem acc = 1;
    for (auto _ : state) {
        for (int a = 1; a < q; ++a) acc = f->mul(acc, felem(a));
        benchmark::DoNotOptimize(acc);
    }
    state.SetItemsProcessed(state.iterations() * (q - 1));
}
BENCHMARK(BM_FieldMul)->Arg(7)->Arg(49)->Arg(256);

void BM_FieldAdd(benchmark::State& state) {
    FieldPtr f = field_of_order(static_cast<int>(state.range(0)));
    const int q = f->q();
    felem acc = 0;
    for (auto _ : state) {
        for (int a = 0; a < q; ++a) acc = f->add(acc, felem(a));
        benchmark::DoNotOptimize(acc);
    }
    state.SetItemsProcessed(state.iterations() * q);
}
BENCHMARK(BM_FieldAdd)->Arg(7)->Arg(49)->Arg(256);

// exhaustive histogram throughput on puncture codes of the reference table
void BM_WeightDistribution(benchmark::State& state) {
    const int q = static_cast<int>(state.range(0));
    const int mu = static_cast<int>(state.range(1));
    auto [p, m] = factor_prime_power(q);
    ExtensionPtr ext = Extension::get(p, m);
    LinearCode code = puncture_code_rs_hermitian(*ext, mu);
    EnumOptions opt;
    std::uint64_t words = saturating_pow(q, code.k());
    for (auto _ : state) {
        WeightDistribution d = weight_distribution(code, opt);
        benchmark::DoNotOptimize(d);
    }
    state.SetItemsProcessed(state.iterations() * words);
    state.SetLabel("[" + std::to_string(code.n()) + "," + std::to_string(code.k()) + "]_" +
                   std::to_string(q));
}
BENCHMARK(BM_WeightDistribution)->Args({4, 2})->Args({3, 1})->Args({5, 3})->Unit(benchmark::kMillisecond);

// the dual-enumeration route used for the big reference rows
void BM_DualEnumeration(benchmark::State& state) {
    ExtensionPtr ext = Extension::get(5, 1);
    LinearCode code = puncture_code_rs_hermitian(*ext, 2);  // [25,16,6]_5: dual is 5^9
    LinearCode dual = dual_euclidean(code);
    EnumOptions opt;
    for (auto _ : state) {
        WeightDistribution d = weight_distribution(dual, opt);
        benchmark::DoNotOptimize(d);
    }
    state.SetItemsProcessed(state.iterations() * saturating_pow(5, dual.k()));
    state.SetLabel("[25,9]_5 dual");
}
BENCHMARK(BM_DualEnumeration)->Unit(benchmark::kMillisecond)->Iterations(1);

void BM_MacWilliams(benchmark::State& state) {
    ExtensionPtr ext = Extension::get(3, 1);
    LinearCode code = puncture_code_rs_hermitian(*ext, 1);  // [9,5,4]_3
    WeightDistribution w = weight_distribution(code);
    for (auto _ : state) {
        WeightDistribution d = macwilliams_transform(w, 9, 5, 3);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(BM_MacWilliams);

void BM_QeccDistance(benchmark::State& state) {
    ExtensionPtr ext = Extension::get(3, 1);
    FamilyPair fam = hermitian_mds_family(*ext, 1);  // [[9,5,3]]_3: 3^14 dual words
    EnumOptions opt;
    for (auto _ : state) {
        ExcludedMinWeight m = qecc_min_distance(fam.code.stabilizer(), opt);
        benchmark::DoNotOptimize(m);
    }
    state.SetLabel("[[9,5,3]]_3");
    state.SetItemsProcessed(state.iterations() * saturating_pow(3, 14));
}
BENCHMARK(BM_QeccDistance)->Unit(benchmark::kMillisecond);

void BM_Rref(benchmark::State& state) {
    ExtensionPtr ext = Extension::get(7, 1);
    Mat g = rs_generator_matrix(ext->ext(), 5);
    for (auto _ : state) {
        RrefResult r = rref(g);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_Rref);

}  // namespace

BENCHMARK_MAIN();
