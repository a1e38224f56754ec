#pragma once

// Independent reference computations for the unit and acceptance tests.
// Everything here is implemented by direct enumeration or by textbook
// recursions and deliberately shares no code path with the facilities it is
// used to check (the recursive shuffle merge, the crystal generator, the
// PBW rewriting engine, the cyclotomic closure).

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "klrc/cartan.hpp"
#include "klrc/character.hpp"
#include "klrc/klr_algebra.hpp"

namespace oracles {

// Quantum shuffle of two single words by explicit enumeration of all
// C(m+n, m) interleavings; the crossing exponent is summed pairwise over
// (left-letter, right-letter) pairs that cross.
klrc::Character brute_shuffle_words(const klrc::CartanDatum& d, const klrc::Word& left,
                                    const klrc::LaurentPoly& left_coeff,
                                    const klrc::Word& right,
                                    const klrc::LaurentPoly& right_coeff);

// Bilinear extension of brute_shuffle_words to whole characters.
klrc::Character brute_shuffle(const klrc::CartanDatum& d, const klrc::Character& f,
                              const klrc::Character& g);

// Positive roots of a finite-type datum in simple-root coordinates, obtained
// by closing the simple roots under the simple reflections.  Throws when the
// closure exceeds `limit` roots (guards against affine data).
std::vector<std::vector<long long>> positive_roots(const klrc::CartanDatum& d,
                                                   std::size_t limit = 64);

// dim V(Lambda) by the Weyl dimension formula.
long long weyl_dimension(const klrc::CartanDatum& d, const klrc::DominantWeight& lambda);

// Weight multiplicities of the irreducible V(Lambda) by the Freudenthal
// recursion.  Keys are the offsets nu with weight = Lambda - nu; the table
// holds exactly the nonzero multiplicities and its total equals
// weyl_dimension(d, lambda).
std::map<klrc::RootVector, long long> freudenthal_multiplicities(
    const klrc::CartanDatum& d, const klrc::DominantWeight& lambda);

// Number of multisets of positive roots summing to nu (the weight-space
// dimension of U(n^-) at -nu for finite type).
long long kostant_partitions(const klrc::CartanDatum& d, const klrc::RootVector& nu);

// (m!)^2 * binomial(lambda, m), the dimension of the sl2 cyclotomic quotient
// R^{lambda Lambda_i}(m alpha_i).
long long sl2_cyclotomic_dimension(int lambda, int m);

// Graded dimensions of every corner 1_dst R(nu) 1_src recovered from the
// rewriting engine alone: the span of all products of generators is closed
// degreewise inside a sufficient degree window and the rank of each
// (src, dst, degree) component is counted.  Degrees above max_degree are
// dropped from the result.
std::map<std::pair<klrc::Word, klrc::Word>, std::map<long long, long long>>
engine_graded_dimensions(const klrc::KlrAlgebra& algebra, const klrc::RootVector& nu,
                         long long max_degree);

// All PBW monomials of the given content and degree, enumerated directly
// from (word, permutation, dot exponents) triples without consulting the
// algebra's own basis enumeration.
std::vector<klrc::PbwMonomial> enumerate_monomials(const klrc::CartanDatum& d,
                                                   const klrc::RootVector& nu,
                                                   long long degree);

}  // namespace oracles
