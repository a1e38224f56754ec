#include "klrc/word.hpp"

#include <algorithm>
#include <sstream>

namespace klrc {

RootVector word_content(const Word& word, int rank) {
    std::vector<int> counts(rank, 0);
    for (int letter : word) {
        if (letter < 0 || letter >= rank) {
            throw Error(ErrorCode::UnknownVertex, "vertex index " + std::to_string(letter));
        }
        ++counts[letter];
    }
    return RootVector(counts);
}

int suffix_run(const Word& word, int i) {
    int run = 0;
    for (auto it = word.rbegin(); it != word.rend() && *it == i; ++it) {
        ++run;
    }
    return run;
}

int prefix_run(const Word& word, int i) {
    int run = 0;
    for (auto it = word.begin(); it != word.end() && *it == i; ++it) {
        ++run;
    }
    return run;
}

std::vector<Word> words_of_content(const RootVector& nu) {
    Word sorted;
    for (int i = 0; i < nu.rank(); ++i) {
        sorted.insert(sorted.end(), nu[i], i);
    }
    std::vector<Word> result;
    if (sorted.empty()) {
        result.push_back({});
        return result;
    }
    do {
        result.push_back(sorted);
    } while (std::next_permutation(sorted.begin(), sorted.end()));
    return result;
}

std::string word_to_string(const CartanDatum& d, const Word& word) {
    std::ostringstream out;
    out << "[";
    for (size_t k = 0; k < word.size(); ++k) {
        if (k > 0) {
            out << ",";
        }
        out << d.label(word[k]);
    }
    out << "]";
    return out.str();
}

}  // namespace klrc
