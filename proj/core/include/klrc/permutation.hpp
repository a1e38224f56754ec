#pragma once

#include <vector>

#include "klrc/cartan.hpp"
#include "klrc/word.hpp"

namespace klrc {

// One-line notation on {0, ..., m-1}: w[p] is the image of position p, so a
// strand entering at bottom position p leaves at top position w[p].
using Permutation = std::vector<int>;

Permutation identity_permutation(int m);

// The adjacent transposition s_t swapping t and t+1, 0 <= t <= m-2.
Permutation transposition(int m, int t);

// Function composition (a * b)(p) = a(b(p)); b acts first.
Permutation compose(const Permutation& a, const Permutation& b);

Permutation inverse_permutation(const Permutation& w);

bool is_identity(const Permutation& w);

// Coxeter length = number of inversions.
int permutation_length(const Permutation& w);

// The word (t_1, ..., t_k) denotes s_{t_1} * ... * s_{t_k}; s_{t_k} acts first.
Permutation word_permutation(const std::vector<int>& word, int m);

bool is_reduced_word(const std::vector<int>& word, int m);

// Lexicographically least reduced word, obtained by repeatedly splitting off
// the smallest left descent.
std::vector<int> canonical_reduced_word(Permutation w);

// Top word of a crossing diagram: top[w[p]] = bottom[p].
Word apply_permutation(const Permutation& w, const Word& bottom);

// Degree of the crossing element psi_w acting on the idempotent of `bottom`:
// minus the sum of (alpha_{bottom_p}, alpha_{bottom_q}) over inversions p < q.
long long psi_degree(const CartanDatum& d, const Permutation& w, const Word& bottom);

// All permutations w with apply_permutation(w, src) == dst.
std::vector<Permutation> permutations_mapping(const Word& src, const Word& dst);

}  // namespace klrc
