#include <benchmark/benchmark.h>

#include "klrc/cartan.hpp"
#include "klrc/character.hpp"
#include "klrc/word.hpp"

namespace {

klrc::CartanDatum a2() {
    return klrc::CartanDatum::validate({"1", "2"}, {{2, -1}, {-1, 2}});
}

klrc::Character word_character(const klrc::Word& word) {
    return klrc::Character::single(klrc::word_content(word, 2), word,
                                   klrc::LaurentPoly::one());
}

void shuffle_words(benchmark::State& state) {
    const klrc::CartanDatum datum = a2();
    const auto half = static_cast<size_t>(state.range(0));
    klrc::Word left(half), right(half);
    for (size_t k = 0; k < half; ++k) {
        left[k] = static_cast<int>(k % 2);
        right[k] = static_cast<int>((k + 1) % 2);
    }
    const klrc::Character f = word_character(left);
    const klrc::Character g = word_character(right);
    for (auto _ : state) {
        benchmark::DoNotOptimize(klrc::shuffle(datum, f, g));
    }
}
BENCHMARK(shuffle_words)->Arg(2)->Arg(3)->Arg(4)->Arg(5);

void shuffle_structure_characters(benchmark::State& state) {
    const klrc::CartanDatum datum = a2();
    const int c = static_cast<int>(state.range(0));
    const klrc::Character f = klrc::char_simple_ci_j(datum, 0, 1, c, c);
    const klrc::Character g = klrc::char_simple_ci_j(datum, 1, 0, 1, 0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(klrc::shuffle(datum, f, g));
    }
}
BENCHMARK(shuffle_structure_characters)->Arg(1)->Arg(2)->Arg(3);

void serre_operator(benchmark::State& state) {
    const klrc::CartanDatum datum = a2();
    const klrc::Character f = klrc::char_simple_ci_j(datum, 0, 1, 2, 1);
    const klrc::Character g = word_character({0, 1});
    const klrc::Character product = klrc::shuffle(datum, f, g);
    for (auto _ : state) {
        benchmark::DoNotOptimize(klrc::serre_apply(datum, product, 0, 1, 2));
    }
}
BENCHMARK(serre_operator);

}  // namespace
