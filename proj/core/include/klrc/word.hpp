#pragma once

#include <string>
#include <vector>

#include "klrc/cartan.hpp"

namespace klrc {

/** Sequence of vertex indices; an element of Seq(nu) for its content nu. */
using Word = std::vector<int>;

/** Content of a word as a root vector of the given rank. */
RootVector word_content(const Word& word, int rank);

/** Length of the maximal run of vertex i at the end of the word. */
int suffix_run(const Word& word, int i);

/** Length of the maximal run of vertex i at the start of the word. */
int prefix_run(const Word& word, int i);

/** All words with the given content, in lexicographic order. */
std::vector<Word> words_of_content(const RootVector& nu);

/** Render as comma-joined labels, e.g. "[1,2,1]". */
std::string word_to_string(const CartanDatum& d, const Word& word);

}  // namespace klrc
