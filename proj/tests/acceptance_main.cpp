// Acceptance gate: one line per criterion, exact comparisons throughout
// (tolerance 0), runtime ceilings pinned in the criterion table below.
// Exit status 0 only when every criterion passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "klrc/binf.hpp"
#include "klrc/cartan.hpp"
#include "klrc/character.hpp"
#include "klrc/crystal.hpp"
#include "klrc/cyclotomic.hpp"
#include "klrc/errors.hpp"
#include "klrc/klr_algebra.hpp"
#include "klrc/nilhecke.hpp"
#include "klrc/verify.hpp"
#include "klrc/word.hpp"
#include "support/oracles.hpp"

using namespace klrc;

namespace {

CartanDatum sl2() { return CartanDatum::validate({"1"}, {{2}}); }
CartanDatum a2() { return CartanDatum::validate({"1", "2"}, {{2, -1}, {-1, 2}}); }
CartanDatum b2() { return CartanDatum::validate({"1", "2"}, {{2, -2}, {-2, 4}}); }
CartanDatum g2() { return CartanDatum::validate({"1", "2"}, {{2, -3}, {-3, 6}}); }
CartanDatum a1_affine() { return CartanDatum::validate({"0", "1"}, {{2, -2}, {-2, 2}}); }

struct Check {
    long long performed = 0;
    std::string failure;  // empty while passing

    void require(bool condition, const std::function<std::string()>& describe) {
        ++performed;
        if (!condition && failure.empty()) failure = describe();
    }
    void require(bool condition, const std::string& describe) {
        require(condition, [&] { return describe; });
    }
    bool ok() const { return failure.empty(); }
};

// The generated graphs shared by criteria 1, 2 and 6.
struct GraphSets {
    std::vector<std::pair<std::string, CrystalGraph>> binf;     // depth 6
    std::vector<std::pair<std::string, CrystalGraph>> blambda;  // complete
};

GraphSets build_graph_sets() {
    GraphSets sets;
    sets.binf.emplace_back("A1 B(inf)", binf_generate(sl2(), 6));
    sets.binf.emplace_back("A2 B(inf)", binf_generate(a2(), 6));
    sets.binf.emplace_back("B2 B(inf)", binf_generate(b2(), 6));
    sets.binf.emplace_back("affine A1 B(inf)", binf_generate(a1_affine(), 6));
    for (int lambda = 0; lambda <= 3; ++lambda) {
        sets.blambda.emplace_back("A1 B(" + std::to_string(lambda) + "L)",
                                  blambda_generate(sl2(), DominantWeight({lambda}), lambda + 2));
    }
    const std::vector<std::pair<std::string, DominantWeight>> a2_weights = {
        {"A2 B(L1)", DominantWeight({1, 0})},
        {"A2 B(L2)", DominantWeight({0, 1})},
        {"A2 B(L1+L2)", DominantWeight({1, 1})},
        {"A2 B(2L1)", DominantWeight({2, 0})},
    };
    for (const auto& [name, weight] : a2_weights) {
        sets.blambda.emplace_back(name, blambda_generate(a2(), weight, 12));
    }
    return sets;
}

void run_suite(Check& check, const std::string& name, const CrystalGraph& graph,
               VerificationSuite suite) {
    const VerificationReport report = verify_axioms(graph, suite);
    check.require(report.passed && report.violations == 0, [&] {
        std::string detail = name + " suite " + to_string(suite) + " reported " +
                             std::to_string(report.violations) + " violations";
        if (!report.witnesses.empty()) detail += "; first: " + report.witnesses.front();
        return detail;
    });
}

// Generic tensor-model node for a graph element: elementary factors for the
// string coordinates plus one all-zero padding cycle, tensored with t_Lambda
// when the graph is engaged against a dominant weight.
CrystalNodePtr tensorize(const CrystalGraph& g, size_t node) {
    const int rank = g.datum.rank();
    const std::vector<int>& trimmed = g.nodes[node].coords;
    const size_t length = trimmed.size() + static_cast<size_t>(rank);
    CrystalNodePtr result;
    if (g.lambda) result = make_weight_shift(*g.lambda);
    for (size_t k = 0; k < length; ++k) {
        const int coordinate = k < trimmed.size() ? trimmed[k] : 0;
        CrystalNodePtr factor = make_elementary(static_cast<int>(k) % rank, -coordinate);
        result = result ? make_tensor(std::move(factor), std::move(result)) : std::move(factor);
    }
    return result;
}

std::string criterion_1(Check& check, const GraphSets& sets) {
    for (const auto& [name, graph] : sets.binf) run_suite(check, name, graph, VerificationSuite::C);
    for (const auto& [name, graph] : sets.blambda) {
        check.require(graph.complete, name + " did not close below the depth cap");
        run_suite(check, name, graph, VerificationSuite::C);
    }
    return "crystal axioms C1-C5 on depth-6 B(inf) (A1, A2, B2, affine A1) and complete B(Lambda)";
}

std::string criterion_2(Check& check, const GraphSets& sets) {
    for (const auto& [name, graph] : sets.binf) {
        run_suite(check, name, graph, VerificationSuite::KS);
        run_suite(check, name, graph, VerificationSuite::PSI);
    }
    for (const auto& [name, graph] : sets.blambda) {
        run_suite(check, name, graph, VerificationSuite::KS);
        run_suite(check, name, graph, VerificationSuite::PSI);
    }
    return "Kashiwara-Saito axioms B1-B7 and embedding strictness on the same truncations";
}

bool weyl_dimension_matches(const CartanDatum& d, const DominantWeight& lambda,
                            const CrystalGraph& g) {
    const auto oracle = oracles::freudenthal_multiplicities(d, lambda);
    const auto table = weight_multiplicities(g);
    if (oracle.size() != table.size()) return false;
    for (const auto& [nu, count] : oracle) {
        const auto it = table.find(nu);
        if (it == table.end() || it->second != count) return false;
    }
    return true;
}

std::string criterion_3(Check& check) {
    const CartanDatum rank1 = sl2();
    for (int lambda = 0; lambda <= 5; ++lambda) {
        const CrystalGraph g = blambda_generate(rank1, DominantWeight({lambda}), lambda + 2);
        check.require(g.complete, "sl2 B(" + std::to_string(lambda) + "L) incomplete");
        check.require(static_cast<long long>(g.nodes.size()) == lambda + 1,
                      "sl2 |B(" + std::to_string(lambda) + "L)| = " +
                          std::to_string(g.nodes.size()) + " != " + std::to_string(lambda + 1));
        check.require(weyl_dimension_matches(rank1, DominantWeight({lambda}), g),
                      "sl2 lambda=" + std::to_string(lambda) + " disagrees with Freudenthal");
    }
    const CartanDatum d = a2();
    const CrystalGraph fundamental = blambda_generate(d, DominantWeight({1, 0}), 10);
    check.require(fundamental.complete && fundamental.nodes.size() == 3,
                  "A2 |B(L1)| = " + std::to_string(fundamental.nodes.size()) + " != 3");
    check.require(weyl_dimension_matches(d, DominantWeight({1, 0}), fundamental),
                  "A2 B(L1) disagrees with Freudenthal");

    const CrystalGraph adjoint = blambda_generate(d, DominantWeight({1, 1}), 12);
    check.require(adjoint.complete && adjoint.nodes.size() == 8,
                  "A2 |B(L1+L2)| = " + std::to_string(adjoint.nodes.size()) + " != 8");
    const auto table = weight_multiplicities(adjoint);
    const auto zero_weight = table.find(RootVector({1, 1}));
    check.require(zero_weight != table.end() && zero_weight->second == 2,
                  "A2 B(L1+L2) zero-weight multiplicity != 2");
    check.require(weyl_dimension_matches(d, DominantWeight({1, 1}), adjoint),
                  "A2 B(L1+L2) disagrees with Freudenthal");
    return "highest-weight counts against the Freudenthal oracle (sl2 lambda<=5; A2 L1, L1+L2)";
}

std::string criterion_4(Check& check) {
    for (const CartanDatum& d : {a2(), b2()}) {
        long long deepest = 0;
        for (int i = 0; i < 2; ++i) deepest = std::max(deepest, d.a(i, 1 - i) + 3);
        const CrystalGraph g = binf_generate(d, static_cast<int>(deepest));
        for (int i = 0; i < 2; ++i) {
            const int j = 1 - i;
            const int a = static_cast<int>(d.a(i, j));
            for (int c = 0; c <= a + 2; ++c) {
                std::vector<int> coords(2, 0);
                coords[i] = c;
                coords[j] = 1;
                const RootVector nu(coords);
                std::multiset<std::vector<long long>> node_stats;
                for (size_t v = 0; v < g.nodes.size(); ++v) {
                    if (g.nodes[v].content != nu) continue;
                    const NodeStats stats = binf_stats(g, v, i);
                    node_stats.insert({stats.eps, stats.eps_vee, stats.jump});
                }
                const long long expected = std::min<long long>(c, a) + 1;
                check.require(static_cast<long long>(node_stats.size()) == expected, [&] {
                    return "count at c=" + std::to_string(c) + " i=" + d.label(i) + " is " +
                           std::to_string(node_stats.size()) + " != " + std::to_string(expected);
                });
                std::multiset<std::vector<long long>> char_values;
                for (int n = std::max(0, c - a); n <= c; ++n) {
                    const CharStats stats = char_stats(d, char_simple_ci_j(d, i, j, c, n));
                    char_values.insert({static_cast<long long>(stats.eps[i]),
                                        static_cast<long long>(stats.eps_vee[i]),
                                        stats.jump[i]});
                }
                check.require(node_stats == char_values, [&] {
                    return "stats multiset mismatch at c=" + std::to_string(c) + " i=" +
                           d.label(i) + " (" + std::to_string(node_stats.size()) + " nodes)";
                });
            }
        }
    }
    return "B(inf) weight-(ci+j) counts min(c,a)+1 and node stats equal char_stats (A2, B2, c<=a+2)";
}

std::string criterion_5(Check& check) {
    std::mt19937 rng(5150);
    long long sampled = 0;
    for (const CartanDatum& d : {a2(), b2(), g2()}) {
        for (int i = 0; i < 2; ++i) {
            const int j = 1 - i;
            const int a = static_cast<int>(d.a(i, j));
            // Annihilation at degree a+1 on every structure character of
            // content (a+1)i + j.
            for (int n = 1; n <= a + 1; ++n) {
                const Character ch = char_simple_ci_j(d, i, j, a + 1, n);
                check.require(serre_apply(d, ch, i, j, a + 1).is_zero(), [&] {
                    return "degree " + std::to_string(a + 1) + " survivor at n=" +
                           std::to_string(n) + " i=" + d.label(i);
                });
            }
            // Non-vanishing below: degree c <= a gives (-1)^n * nonzero.
            for (int c = 0; c <= a; ++c) {
                for (int n = 0; n <= c; ++n) {
                    const Character image =
                        serre_apply(d, char_simple_ci_j(d, i, j, c, n), i, j, c);
                    bool sign_ok = false;
                    if (!image.is_zero()) {
                        const BigInt value = image.coefficient({}).eval_at_one();
                        sign_ok = (n % 2 == 0) ? value > 0 : value < 0;
                    }
                    check.require(sign_ok, [&] {
                        return "degree " + std::to_string(c) + " image at n=" +
                               std::to_string(n) + " i=" + d.label(i) +
                               " is not (-1)^n * nonzero";
                    });
                }
            }
            if (a < 1 || a > 3) continue;
            // Sampled shuffle products around the structure character must
            // also die at degree a+1.
            std::uniform_int_distribution<int> pick_len(0, 2);
            std::uniform_int_distribution<int> pick_letter(0, 1);
            std::uniform_int_distribution<int> pick_n(1, a + 1);
            // A word's character is the shuffle of its letters (the induced
            // module), so factors are built letter by letter.
            auto letters_character = [&](const Word& word) {
                Character result =
                    Character::single(RootVector::zero(2), {}, LaurentPoly::one());
                for (const int letter : word) {
                    result = shuffle(d, result,
                                     Character::single(word_content({letter}, 2), {letter},
                                                       LaurentPoly::one()));
                }
                return result;
            };
            for (int trial = 0; trial < 10; ++trial) {
                Word left(pick_len(rng));
                Word right(pick_len(rng));
                for (int& x : left) x = pick_letter(rng);
                for (int& x : right) x = pick_letter(rng);
                const Character f = letters_character(left);
                const Character g = letters_character(right);
                const Character middle = char_simple_ci_j(d, i, j, a + 1, pick_n(rng));
                const Character product = shuffle(d, f, shuffle(d, middle, g));
                ++sampled;
                check.require(serre_apply(d, product, i, j, a + 1).is_zero(), [&] {
                    return "sampled shuffle survivor (trial " + std::to_string(trial) +
                           ", i=" + d.label(i) + ")";
                });
            }
        }
    }
    check.require(sampled >= 50,
                  "only " + std::to_string(sampled) + " sampled shuffle products");
    return "Serre operator: zero at degree a+1 (structure chars and " +
           std::to_string(sampled) + " sampled shuffles), (-1)^n nonzero at c<=a";
}

std::string criterion_6(Check& check, const GraphSets& sets) {
    for (const auto& [name, graph] : sets.blambda) {
        const DominantWeight& lambda = *graph.lambda;
        for (size_t v = 0; v < graph.nodes.size(); ++v) {
            const CrystalNodePtr model = tensorize(graph, v);
            for (int i = 0; i < graph.datum.rank(); ++i) {
                const NodeStats stats = binf_stats(graph, v, i);
                const long long by_formula = lambda[i] + stats.eps + stats.weight;
                const long long by_tensor = crystal_phi(graph.datum, model, i);
                long long by_count = 0;
                for (long long cursor = static_cast<long long>(v);
                     graph.lower_target[static_cast<size_t>(cursor)][i] != CrystalGraph::kAbsent;
                     cursor = graph.lower_target[static_cast<size_t>(cursor)][i]) {
                    ++by_count;
                }
                check.require(by_formula == by_tensor && by_tensor == by_count, [&] {
                    return name + " node " + std::to_string(v) + " i=" + graph.datum.label(i) +
                           ": phi formulas " + std::to_string(by_formula) + "/" +
                           std::to_string(by_tensor) + "/" + std::to_string(by_count);
                });
                check.require(stats.phi_lambda && *stats.phi_lambda == by_formula,
                              name + " cached phi_lambda disagrees");
            }
        }
        for (const CrystalEdge& edge : graph.edges) {
            for (int i = 0; i < graph.datum.rank(); ++i) {
                if (i == edge.label) continue;
                const long long before = binf_stats(graph, edge.from, i).eps;
                const long long after = binf_stats(graph, edge.to, i).eps;
                const long long a = graph.datum.a(i, edge.label);
                check.require(after <= before && after >= before - a, [&] {
                    return name + " eps window violated on edge " + std::to_string(edge.from) +
                           "->" + std::to_string(edge.to);
                });
            }
        }
    }
    return "phi^Lambda three-way agreement and the eps_i window on all complete B(Lambda)";
}

std::string criterion_7(Check& check) {
    std::mt19937 rng(741776);
    for (const CartanDatum& d : {a2(), b2()}) {
        const KlrAlgebra algebra(d);
        std::vector<RootVector> contents;
        for (int p = 0; p <= 4; ++p) {
            for (int q = 0; p + q <= 4; ++q) {
                if (p + q >= 1) contents.emplace_back(std::vector<int>{p, q});
            }
        }
        for (const RootVector& nu : contents) {
            const std::vector<Word> words = words_of_content(nu);
            std::uniform_int_distribution<size_t> pick_word(0, words.size() - 1);
            std::uniform_int_distribution<long long> pick_degree(-2, 4);
            std::uniform_int_distribution<int> pick_coeff(0, 3);
            auto random_element = [&]() {
                static const Rational coeffs[] = {Rational(1), Rational(-1), Rational(1, 2),
                                                  Rational(2)};
                for (int attempt = 0; attempt < 30; ++attempt) {
                    const Word& src = words[pick_word(rng)];
                    const Word& dst = words[pick_word(rng)];
                    const auto basis = algebra.basis_in_degree(src, dst, pick_degree(rng));
                    if (basis.empty()) continue;
                    std::uniform_int_distribution<size_t> pick(0, basis.size() - 1);
                    KlrElement element(nu);
                    element.add_term(basis[pick(rng)], coeffs[pick_coeff(rng)]);
                    return element;
                }
                return algebra.idempotent(words.front());
            };
            for (int trial = 0; trial < 200; ++trial) {
                const KlrElement a = random_element();
                const KlrElement b = random_element();
                const KlrElement c = random_element();
                const KlrElement left = algebra.multiply(algebra.multiply(a, b), c);
                const KlrElement right = algebra.multiply(a, algebra.multiply(b, c));
                check.require(left == right, [&] {
                    std::ostringstream out;
                    out << "associativity failed for |nu|=" << nu.height() << " trial " << trial;
                    return out.str();
                });
            }
            for (int trial = 0; trial < 8; ++trial) {
                const KlrElement a = random_element();
                const KlrElement b = random_element();
                check.require(algebra.sigma(algebra.sigma(a)) == a, "sigma^2 != id");
                check.require(algebra.sigma(algebra.multiply(a, b)) ==
                                  algebra.multiply(algebra.sigma(a), algebra.sigma(b)),
                              "sigma not multiplicative");
            }
        }
        // Rewriting-engine graded dimensions against the closed-form series.
        for (int p = 0; p <= 3; ++p) {
            for (int q = 0; p + q <= 3; ++q) {
                if (p + q < 1) continue;
                const RootVector nu(std::vector<int>{p, q});
                const auto engine = oracles::engine_graded_dimensions(algebra, nu, 6);
                for (const Word& src : words_of_content(nu)) {
                    for (const Word& dst : words_of_content(nu)) {
                        const LaurentPoly series = algebra.graded_dim_series(src, dst, 6);
                        const auto& ranks = engine.at({src, dst});
                        for (long long degree = -12; degree <= 6; ++degree) {
                            const auto it = ranks.find(degree);
                            const long long rank = it == ranks.end() ? 0 : it->second;
                            check.require(BigInt(rank) == series.coefficient(degree), [&] {
                                std::ostringstream out;
                                out << "engine rank " << rank << " != series at degree " << degree
                                    << " nu=(" << p << "," << q << ")";
                                return out.str();
                            });
                        }
                    }
                }
            }
        }
    }
    // One-vertex faithfulness against the divided-difference representation.
    const KlrAlgebra nil(sl2());
    for (int m = 1; m <= 3; ++m) {
        const Word word(static_cast<size_t>(m), 0);
        std::uniform_int_distribution<int> pick_kind(0, 1);
        std::uniform_int_distribution<int> pick_strand(0, m - 1);
        std::uniform_int_distribution<int> pick_cross(0, std::max(0, m - 2));
        std::uniform_int_distribution<int> pick_len(1, 6);
        for (int trial = 0; trial < 15; ++trial) {
            std::vector<NilHeckeGenerator> gens;
            KlrElement element = nil.idempotent(word);
            const int len = pick_len(rng);
            for (int k = 0; k < len; ++k) {
                const bool is_dot = m == 1 ? true : pick_kind(rng) == 1;
                const int index = is_dot ? pick_strand(rng) : pick_cross(rng);
                gens.insert(gens.begin(), {is_dot, index});
                element = is_dot ? nil.left_dot(index, element) : nil.left_crossing(index, element);
            }
            std::vector<int> exps(static_cast<size_t>(m), 0);
            std::function<bool(int)> probe = [&](int position) -> bool {
                if (position == m) {
                    NilPolynomial f(m);
                    f.add_term(exps, Rational(1));
                    NilPolynomial via_element(m);
                    for (const auto& [monomial, coeff] : element.terms()) {
                        std::vector<NilHeckeGenerator> word_ops;
                        for (const int t : monomial.psi_word) word_ops.push_back({false, t});
                        for (int strand = 0; strand < m; ++strand) {
                            for (int k = 0; k < monomial.dot_powers[strand]; ++k) {
                                word_ops.push_back({true, strand});
                            }
                        }
                        NilPolynomial scale(m);
                        scale.add_term(std::vector<int>(static_cast<size_t>(m), 0), coeff);
                        via_element = via_element + nilhecke_apply(f, word_ops) * scale;
                    }
                    return via_element == nilhecke_apply(f, gens);
                }
                for (int e = 0; e <= 2; ++e) {
                    exps[static_cast<size_t>(position)] = e;
                    if (!probe(position + 1)) return false;
                }
                return true;
            };
            check.require(probe(0), "one-vertex action disagrees with the divided-difference oracle");
        }
    }
    return "KLR engine: associativity (200/nu, |nu|<=4), sigma, engine-vs-series dims, nilHecke";
}

// A strand nilpotency of 0 means the idempotent itself lies in the ideal,
// which is the (trivially nilpotent) zero quotient; a positive quotient must
// show a positive exponent with x^k = 0.
void require_nilpotent_dots(Check& check, const CyclotomicPresentation& presentation) {
    for (const int nil : presentation.strand_nilpotency) {
        const bool nilpotent =
            presentation.total_dimension > 0 ? nil >= 1 : nil == 0;
        check.require(nilpotent && nil <= presentation.nilpotency_witness,
                      "strand without a dot-nilpotency witness");
    }
}

std::string criterion_8(Check& check) {
    const KlrAlgebra rank1(sl2());
    // Exact sl2 dimensions.
    for (int lambda = 0; lambda <= 3; ++lambda) {
        for (int m = 0; m <= 3; ++m) {
            const auto presentation =
                cyclotomic_build(rank1, RootVector({m}), DominantWeight({lambda}));
            require_nilpotent_dots(check, presentation);
            const long long expected = oracles::sl2_cyclotomic_dimension(lambda, m);
            check.require(presentation.total_dimension == expected, [&] {
                return "sl2 dim R^" + std::to_string(lambda) + "(" + std::to_string(m) +
                       ") = " + std::to_string(presentation.total_dimension) + " != " +
                       std::to_string(expected);
            });
        }
    }
    // Nonvanishing matches the crystal multiplicity (sl2 lambda <= 3, |nu| <= 3).
    for (int lambda = 0; lambda <= 3; ++lambda) {
        const CrystalGraph g = blambda_generate(sl2(), DominantWeight({lambda}), lambda + 2);
        const auto table = weight_multiplicities(g);
        for (int m = 0; m <= 3; ++m) {
            const auto presentation =
                cyclotomic_build(rank1, RootVector({m}), DominantWeight({lambda}));
            require_nilpotent_dots(check, presentation);
            const auto it = table.find(RootVector({m}));
            const long long mult = it == table.end() ? 0 : it->second;
            check.require((presentation.total_dimension > 0) == (mult > 0), [&] {
                return "sl2 lambda=" + std::to_string(lambda) + " m=" + std::to_string(m) +
                       ": dim " + std::to_string(presentation.total_dimension) +
                       " vs multiplicity " + std::to_string(mult);
            });
        }
    }
    const KlrAlgebra rank2(a2());
    for (const DominantWeight& lambda :
         {DominantWeight({1, 0}), DominantWeight({1, 1})}) {
        const CrystalGraph g = blambda_generate(a2(), lambda, 12);
        const auto table = weight_multiplicities(g);
        for (int p = 0; p <= 3; ++p) {
            for (int q = 0; p + q <= 3; ++q) {
                const RootVector nu(std::vector<int>{p, q});
                const auto presentation = cyclotomic_build(rank2, nu, lambda);
                require_nilpotent_dots(check, presentation);
                const auto it = table.find(nu);
                const long long mult = it == table.end() ? 0 : it->second;
                check.require((presentation.total_dimension > 0) == (mult > 0), [&] {
                    return "A2 nu=(" + std::to_string(p) + "," + std::to_string(q) +
                           "): dim " + std::to_string(presentation.total_dimension) +
                           " vs multiplicity " + std::to_string(mult);
                });
            }
        }
    }
    return "cyclotomic: nilpotent dots, sl2 (m!)^2 C(lambda,m), dim>0 iff crystal mult>0";
}

}  // namespace

int main() {
    struct Criterion {
        int number;
        double ceiling_seconds;  // 0 disables the ceiling
        std::function<std::string(Check&)> body;
    };

    GraphSets sets;
    try {
        sets = build_graph_sets();
    } catch (const std::exception& error) {
        std::cout << "[FAIL] criterion 1: graph generation threw: " << error.what() << "\n";
        return 1;
    }

    const std::vector<Criterion> criteria = {
        {1, 10.0, [&](Check& c) { return criterion_1(c, sets); }},
        {2, 0.0, [&](Check& c) { return criterion_2(c, sets); }},
        {3, 0.0, criterion_3},
        {4, 0.0, criterion_4},
        {5, 0.0, criterion_5},
        {6, 0.0, [&](Check& c) { return criterion_6(c, sets); }},
        {7, 60.0, criterion_7},
        {8, 300.0, criterion_8},
    };

    bool all_passed = true;
    for (const Criterion& criterion : criteria) {
        Check check;
        std::string description;
        const auto start = std::chrono::steady_clock::now();
        try {
            description = criterion.body(check);
        } catch (const std::exception& error) {
            check.require(false, std::string("threw: ") + error.what());
            description = "criterion body aborted";
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (criterion.ceiling_seconds > 0 && seconds > criterion.ceiling_seconds) {
            check.require(false, [&] {
                std::ostringstream out;
                out << "runtime " << seconds << "s exceeds the " << criterion.ceiling_seconds
                    << "s ceiling";
                return out.str();
            });
        }
        char timing[32];
        std::snprintf(timing, sizeof(timing), "%.2fs", seconds);
        if (check.ok()) {
            std::cout << "[PASS] criterion " << criterion.number << " (" << timing << ", "
                      << check.performed << " checks): " << description << "\n";
        } else {
            all_passed = false;
            std::cout << "[FAIL] criterion " << criterion.number << " (" << timing << "): "
                      << description << " - " << check.failure << "\n";
        }
    }
    return all_passed ? 0 : 1;
}
