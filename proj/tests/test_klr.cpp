#include <doctest.h>

#include <functional>
#include <random>
#include <vector>

#include "klrc/cartan.hpp"
#include "klrc/klr_algebra.hpp"
#include "klrc/nilhecke.hpp"
#include "klrc/permutation.hpp"
#include "klrc/word.hpp"
#include "support/oracles.hpp"

using namespace klrc;

namespace {

CartanDatum sl2() { return CartanDatum::validate({"1"}, {{2}}); }
CartanDatum a2() { return CartanDatum::validate({"1", "2"}, {{2, -1}, {-1, 2}}); }
CartanDatum b2() { return CartanDatum::validate({"1", "2"}, {{2, -2}, {-2, 4}}); }

KlrElement monomial_element(const KlrAlgebra& algebra, Word src, std::vector<int> psi_word,
                            std::vector<int> dots, Rational coeff = 1) {
    KlrElement element(algebra.content_of(src));
    element.add_term(PbwMonomial{std::move(src), std::move(psi_word), std::move(dots)}, coeff);
    return element;
}

// Action of a one-vertex element on a polynomial: dots multiply, crossings
// apply the divided difference; the rightmost factor of the monomial acts
// first.
NilPolynomial act(const KlrElement& element, const NilPolynomial& f) {
    NilPolynomial result(f.vars());
    for (const auto& [monomial, coeff] : element.terms()) {
        std::vector<NilHeckeGenerator> word;
        for (const int t : monomial.psi_word) word.push_back({false, t});
        for (int strand = 0; strand < static_cast<int>(monomial.dot_powers.size()); ++strand) {
            for (int k = 0; k < monomial.dot_powers[strand]; ++k) word.push_back({true, strand});
        }
        NilPolynomial scale(f.vars());
        scale.add_term(std::vector<int>(f.vars(), 0), coeff);
        NilPolynomial piece = nilhecke_apply(f, word) * scale;
        result = result + piece;
    }
    return result;
}

}  // namespace

TEST_SUITE("klr") {

TEST_CASE("permutation utilities") {
    const Permutation id = identity_permutation(3);
    CHECK(is_identity(id));
    const Permutation s0 = transposition(3, 0);
    const Permutation s1 = transposition(3, 1);
    const Permutation w = compose(s0, s1);  // s1 acts first
    CHECK(w == Permutation{1, 2, 0});
    CHECK(permutation_length(w) == 2);
    CHECK(compose(w, inverse_permutation(w)) == id);
    CHECK(word_permutation({0, 1}, 3) == w);
    CHECK(is_reduced_word({0, 1}, 3));
    CHECK(!is_reduced_word({0, 0}, 3));
    CHECK(canonical_reduced_word(w) == std::vector<int>{0, 1});

    // The longest element of S_3 has the lexicographically least reduced word
    // 0,1,0 rather than 1,0,1.
    const Permutation w0{2, 1, 0};
    CHECK(canonical_reduced_word(w0) == std::vector<int>{0, 1, 0});
    CHECK(apply_permutation(w, {7, 8, 9}) == Word{9, 7, 8});

    const CartanDatum d = a2();
    CHECK(psi_degree(d, transposition(2, 0), {0, 1}) == 1);
    CHECK(psi_degree(d, transposition(2, 0), {0, 0}) == -2);
    CHECK(permutations_mapping({0, 1}, {1, 0}).size() == 1);
    CHECK(permutations_mapping({0, 0}, {0, 0}).size() == 2);
    CHECK(permutations_mapping({0, 1}, {0, 1}).size() == 1);
}

TEST_CASE("dot past crossing on equal labels leaves a correction term") {
    const KlrAlgebra algebra(sl2());
    const Word ii{0, 0};
    const KlrElement psi = algebra.crossing_generator(ii, 0);
    const KlrElement product = algebra.multiply(algebra.dot_generator(ii, 0), psi);

    KlrElement expected = monomial_element(algebra, ii, {0}, {0, 1});
    expected += monomial_element(algebra, ii, {}, {0, 0});
    CHECK(product == expected);
}

TEST_CASE("crossings on equal labels square to zero") {
    const KlrAlgebra algebra(sl2());
    const KlrElement psi = algebra.crossing_generator({0, 0}, 0);
    CHECK(algebra.multiply(psi, psi).is_zero());
}

TEST_CASE("crossings on adjacent labels square to the quadratic polynomial") {
    const KlrAlgebra a2_algebra(a2());
    const Word word{0, 1};
    const KlrElement psi = a2_algebra.crossing_generator(word, 0);
    const KlrElement back = a2_algebra.crossing_generator({1, 0}, 0);
    KlrElement expected = monomial_element(a2_algebra, word, {}, {1, 0});
    expected += monomial_element(a2_algebra, word, {}, {0, 1});
    CHECK(a2_algebra.multiply(back, psi) == expected);

    // B2: <h_1, alpha_2> = -2 and <h_2, alpha_1> = -1 give x_1^2 + x_2.
    const KlrAlgebra b2_algebra(b2());
    const KlrElement b_psi = b2_algebra.crossing_generator(word, 0);
    const KlrElement b_back = b2_algebra.crossing_generator({1, 0}, 0);
    KlrElement b_expected = monomial_element(b2_algebra, word, {}, {2, 0});
    b_expected += monomial_element(b2_algebra, word, {}, {0, 1});
    CHECK(b2_algebra.multiply(b_back, b_psi) == b_expected);
}

TEST_CASE("braid relation holds with the cubic correction") {
    const KlrAlgebra algebra(a2());
    const Word word{0, 1, 0};
    auto chain = [&](std::initializer_list<int> crossings) {
        KlrElement element = algebra.idempotent(word);
        for (auto it = std::rbegin(crossings); it != std::rend(crossings); ++it) {
            element = algebra.left_crossing(*it, element);
        }
        return element;
    };
    const KlrElement lhs = chain({0, 1, 0});
    const KlrElement rhs = chain({1, 0, 1});
    const KlrElement difference = lhs - rhs;
    // i_1 = i_3 adjacent to i_2: the difference is the degree-0 correction,
    // a crossing-free +/-1 multiple of the idempotent.
    REQUIRE(difference.terms().size() == 1);
    const auto& [monomial, coeff] = *difference.terms().begin();
    CHECK(monomial.psi_word.empty());
    CHECK(monomial.dot_powers == std::vector<int>{0, 0, 0});
    CHECK((coeff == 1 || coeff == -1));

    // Distant labels commute on the nose: i_1 = i_3 = i_2 is the nilHecke
    // braid, which holds without correction.
    const KlrAlgebra nil(sl2());
    const Word iii{0, 0, 0};
    auto nil_chain = [&](std::initializer_list<int> crossings) {
        KlrElement element = nil.idempotent(iii);
        for (auto it = std::rbegin(crossings); it != std::rend(crossings); ++it) {
            element = nil.left_crossing(*it, element);
        }
        return element;
    };
    CHECK(nil_chain({0, 1, 0}) == nil_chain({1, 0, 1}));
}

TEST_CASE("sigma matches the mirror images from the defining assignment") {
    const KlrAlgebra algebra(a2());
    CHECK(algebra.sigma(algebra.idempotent({0, 1})) == algebra.idempotent({1, 0}));
    CHECK(algebra.sigma(algebra.dot_generator({0, 1}, 0)) ==
          algebra.dot_generator({1, 0}, 1));

    const KlrAlgebra nil(sl2());
    const KlrElement psi = nil.crossing_generator({0, 0}, 0);
    CHECK(nil.sigma(psi) == psi.scaled(Rational(-1)));

    // sigma is an involution and multiplicative on a sample product.
    const KlrElement a = algebra.crossing_generator({0, 1}, 0);
    const KlrElement b = algebra.dot_generator({0, 1}, 1);
    CHECK(algebra.sigma(algebra.sigma(a)) == a);
    CHECK(nil.sigma(nil.sigma(psi)) == psi);
    CHECK(algebra.sigma(algebra.multiply(a, b)) ==
          algebra.multiply(algebra.sigma(a), algebra.sigma(b)));
}

TEST_CASE("degrees of generators and additivity") {
    const KlrAlgebra nil(sl2());
    CHECK(nil.monomial_degree(PbwMonomial{{0}, {}, {1}}) == 2);
    CHECK(nil.monomial_degree(PbwMonomial{{0}, {}, {0}}) == 0);
    CHECK(*nil.homogeneous_degree(nil.idempotent({0, 0})) == 0);

    const KlrAlgebra algebra(a2());
    CHECK(algebra.monomial_degree(PbwMonomial{{0, 1}, {0}, {0, 0}}) == 1);

    const KlrElement x = algebra.dot_generator({0, 1}, 0);
    const KlrElement psi = algebra.crossing_generator({0, 1}, 0);
    const KlrElement product = algebra.multiply(algebra.dot_generator({1, 0}, 1), psi);
    REQUIRE(algebra.homogeneous_degree(product));
    CHECK(*algebra.homogeneous_degree(product) ==
          *algebra.homogeneous_degree(x) + *algebra.homogeneous_degree(psi));
}

TEST_CASE("graded dimension series match the closed-form counts") {
    const KlrAlgebra nil(sl2());
    LaurentPoly line;
    line += LaurentPoly::term(0, 1);
    line += LaurentPoly::term(2, 1);
    line += LaurentPoly::term(4, 1);
    CHECK(nil.graded_dim_series({0}, {0}, 4) == line);

    const LaurentPoly two = nil.graded_dim_series({0, 0}, {0, 0}, 4);
    CHECK(two.min_exponent() == -2);
    CHECK(two.coefficient(-2) == 1);
    CHECK(two.coefficient(0) == 3);

    const KlrAlgebra algebra(a2());
    CHECK(algebra.graded_dim_series({0, 1}, {1, 0}, 1) == LaurentPoly::term(1, 1));
}

TEST_CASE("basis_in_degree agrees with the series coefficient") {
    const KlrAlgebra algebra(a2());
    const RootVector nu({1, 1});
    for (const Word& src : words_of_content(nu)) {
        for (const Word& dst : words_of_content(nu)) {
            const LaurentPoly series = algebra.graded_dim_series(src, dst, 5);
            for (long long degree = -4; degree <= 5; ++degree) {
                const auto basis = algebra.basis_in_degree(src, dst, degree);
                CHECK(BigInt(basis.size()) == series.coefficient(degree));
            }
        }
    }
}

TEST_CASE("rewriting engine spans exactly the PBW predictions") {
    const KlrAlgebra algebra(a2());
    const RootVector nu({1, 1});
    const auto engine = oracles::engine_graded_dimensions(algebra, nu, 4);
    for (const Word& src : words_of_content(nu)) {
        for (const Word& dst : words_of_content(nu)) {
            const LaurentPoly series = algebra.graded_dim_series(src, dst, 4);
            const auto& ranks = engine.at({src, dst});
            for (long long degree = -4; degree <= 4; ++degree) {
                const auto it = ranks.find(degree);
                const long long rank = it == ranks.end() ? 0 : it->second;
                CHECK(BigInt(rank) == series.coefficient(degree));
            }
        }
    }
}

TEST_CASE("content mismatch is rejected") {
    const KlrAlgebra algebra(a2());
    const KlrElement a = algebra.idempotent({0});
    const KlrElement b = algebra.idempotent({1});
    CHECK_THROWS_AS(algebra.multiply(a, b), Error);
}

TEST_CASE("associativity on sampled homogeneous triples") {
    std::mt19937 rng(7311);
    for (const CartanDatum& datum : {a2(), b2()}) {
        const KlrAlgebra algebra(datum);
        const RootVector nu({2, 1});
        const std::vector<Word> words = words_of_content(nu);
        auto random_element = [&]() {
            std::uniform_int_distribution<size_t> pick_word(0, words.size() - 1);
            std::uniform_int_distribution<long long> pick_degree(-2, 4);
            for (int attempt = 0; attempt < 40; ++attempt) {
                const Word& src = words[pick_word(rng)];
                const Word& dst = words[pick_word(rng)];
                const auto basis = algebra.basis_in_degree(src, dst, pick_degree(rng));
                if (basis.empty()) continue;
                std::uniform_int_distribution<size_t> pick(0, basis.size() - 1);
                KlrElement element(nu);
                element.add_term(basis[pick(rng)], Rational(1));
                const auto second = basis[pick(rng)];
                element.add_term(second, element.terms().count(second) ? Rational(1)
                                                                       : Rational(-1, 2));
                return element;
            }
            return algebra.idempotent(words.front());
        };
        for (int trial = 0; trial < 25; ++trial) {
            const KlrElement a = random_element();
            const KlrElement b = random_element();
            const KlrElement c = random_element();
            CHECK(algebra.multiply(algebra.multiply(a, b), c) ==
                  algebra.multiply(a, algebra.multiply(b, c)));
        }
    }
}

TEST_CASE("one-vertex products act like the divided-difference oracle") {
    const KlrAlgebra algebra(sl2());
    std::mt19937 rng(90125);
    for (int m = 2; m <= 3; ++m) {
        const Word word(m, 0);
        std::uniform_int_distribution<int> pick_kind(0, 1);
        std::uniform_int_distribution<int> pick_strand(0, m - 1);
        std::uniform_int_distribution<int> pick_cross(0, m - 2);
        for (int trial = 0; trial < 12; ++trial) {
            std::vector<NilHeckeGenerator> gens;
            KlrElement element = algebra.idempotent(word);
            std::uniform_int_distribution<int> pick_len(1, 5);
            const int len = pick_len(rng);
            for (int k = 0; k < len; ++k) {
                const bool is_dot = pick_kind(rng) == 1;
                const int index = is_dot ? pick_strand(rng) : pick_cross(rng);
                gens.insert(gens.begin(), {is_dot, index});
                element = is_dot ? algebra.left_dot(index, element)
                                 : algebra.left_crossing(index, element);
            }
            // Probe with every small monomial; the action is faithful, so
            // agreement here pins the product down at desk scale.
            std::vector<int> exps(m, 0);
            std::function<void(int)> probe = [&](int position) {
                if (position == m) {
                    NilPolynomial f(m);
                    f.add_term(exps, Rational(1));
                    CHECK(act(element, f) == nilhecke_apply(f, gens));
                    return;
                }
                for (int e = 0; e <= 2; ++e) {
                    exps[position] = e;
                    probe(position + 1);
                }
            };
            probe(0);
        }
    }
}

TEST_CASE("divided differences satisfy the textbook identities") {
    NilPolynomial x1 = NilPolynomial::variable(2, 0);
    NilPolynomial x2 = NilPolynomial::variable(2, 1);
    CHECK(x1.divided_difference(0) == NilPolynomial::one(2));
    CHECK((x1 * x2).divided_difference(0).is_zero());
    CHECK((x1 * x1).divided_difference(0) == x1 + x2);
}

}  // TEST_SUITE
