#include <benchmark/benchmark.h>

#include <vector>

#include "klrc/cartan.hpp"
#include "klrc/klr_algebra.hpp"
#include "klrc/word.hpp"

namespace {

klrc::CartanDatum a2() {
    return klrc::CartanDatum::validate({"1", "2"}, {{2, -1}, {-1, 2}});
}

void multiply_basis_elements(benchmark::State& state) {
    const klrc::KlrAlgebra algebra(a2());
    const int height = static_cast<int>(state.range(0));
    const klrc::RootVector nu(std::vector<int>{(height + 1) / 2, height / 2});
    const auto words = klrc::words_of_content(nu);
    std::vector<klrc::KlrElement> factors;
    for (const auto& src : words) {
        for (const auto& dst : words) {
            for (long long degree = 0; degree <= 2; ++degree) {
                for (const auto& monomial : algebra.basis_in_degree(src, dst, degree)) {
                    klrc::KlrElement element(nu);
                    element.add_term(monomial, klrc::Rational(1));
                    factors.push_back(element);
                }
            }
        }
    }
    size_t cursor = 0;
    for (auto _ : state) {
        const auto& left = factors[cursor % factors.size()];
        const auto& right = factors[(cursor * 7 + 3) % factors.size()];
        benchmark::DoNotOptimize(algebra.multiply(left, right));
        ++cursor;
    }
}
BENCHMARK(multiply_basis_elements)->Arg(2)->Arg(3)->Arg(4);

void graded_dimension_series(benchmark::State& state) {
    const klrc::KlrAlgebra algebra(a2());
    const klrc::RootVector nu(std::vector<int>{2, 1});
    const klrc::Word src = {0, 1, 0};
    const klrc::Word dst = {0, 0, 1};
    for (auto _ : state) {
        benchmark::DoNotOptimize(algebra.graded_dim_series(src, dst, 6));
    }
}
BENCHMARK(graded_dimension_series);

}  // namespace
