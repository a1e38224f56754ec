#include <benchmark/benchmark.h>

#include "klrc/binf.hpp"
#include "klrc/cartan.hpp"
#include "klrc/verify.hpp"

namespace {

klrc::CartanDatum a2() {
    return klrc::CartanDatum::validate({"1", "2"}, {{2, -1}, {-1, 2}});
}

void generate_binf(benchmark::State& state) {
    const klrc::CartanDatum datum = a2();
    const int depth = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(klrc::binf_generate(datum, depth));
    }
}
BENCHMARK(generate_binf)->Arg(3)->Arg(4)->Arg(5)->Arg(6);

void generate_blambda_adjoint(benchmark::State& state) {
    const klrc::CartanDatum datum = a2();
    const klrc::DominantWeight lambda({1, 1});
    for (auto _ : state) {
        benchmark::DoNotOptimize(klrc::blambda_generate(datum, lambda, 12));
    }
}
BENCHMARK(generate_blambda_adjoint);

void verify_axiom_suite(benchmark::State& state) {
    const klrc::CrystalGraph graph = klrc::binf_generate(a2(), 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(klrc::verify_axioms(graph, klrc::VerificationSuite::C));
    }
}
BENCHMARK(verify_axiom_suite);

}  // namespace
