// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "rcch/axioms.hpp"
#include "rcch/circuit.hpp"
#include "rcch/codec.hpp"
#include "rcch/normalform.hpp"
#include "rcch/synth.hpp"

using namespace rcch;

static void BM_CircuitSemantics(benchmark::State& st) {
    Circuit c = random_circuit(static_cast<int>(st.range(0)), 40, 1);
    for (auto _ : st) benchmark::DoNotOptimize(semantics(c));
}
BENCHMARK(BM_CircuitSemantics)->Arg(3)->Arg(5)->Arg(7);

static void BM_Synthesize(benchmark::State& st) {
    RingMatrix m = word_semantics(random_word(static_cast<int>(st.range(0)), 30, 2));
    for (auto _ : st) benchmark::DoNotOptimize(exact_synthesize(m));
}
BENCHMARK(BM_Synthesize)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

static void BM_EncodeDecode(benchmark::State& st) {
    Circuit c = random_circuit(static_cast<int>(st.range(0)), 10, 3);
    for (auto _ : st) benchmark::DoNotOptimize(decode_n(encode_n(c)));
}
BENCHMARK(BM_EncodeDecode)->Arg(3)->Arg(4)->Arg(5);

static void BM_NormalFormHFree(benchmark::State& st) {
    Word w = random_word(static_cast<int>(st.range(0)), 40, 4, false);
    w.gens.push_back(Gen::neg(0));
    if (word_parities(w).zx) w.gens.pop_back();
    for (auto _ : st) benchmark::DoNotOptimize(nf_hfree(w));
}
BENCHMARK(BM_NormalFormHFree)->Arg(8)->Arg(16);

static void BM_CheckCatalog(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(check_catalog("fig8", 8, 200, 1));
}
BENCHMARK(BM_CheckCatalog)->Unit(benchmark::kMillisecond);

static void BM_Transport(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(rs_transport_entries());
}
BENCHMARK(BM_Transport)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
