#include "klrc/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "klrc/errors.hpp"

namespace klrc {

Permutation identity_permutation(int m) {
    Permutation w(m);
    std::iota(w.begin(), w.end(), 0);
    return w;
}

Permutation transposition(int m, int t) {
    if (t < 0 || t + 1 >= m) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "transposition index " + std::to_string(t) + " out of range for m = " +
                        std::to_string(m));
    }
    Permutation w = identity_permutation(m);
    std::swap(w[t], w[t + 1]);
    return w;
}

Permutation compose(const Permutation& a, const Permutation& b) {
    Permutation result(b.size());
    for (size_t p = 0; p < b.size(); ++p) {
        result[p] = a[b[p]];
    }
    return result;
}

Permutation inverse_permutation(const Permutation& w) {
    Permutation inv(w.size());
    for (size_t p = 0; p < w.size(); ++p) {
        inv[w[p]] = static_cast<int>(p);
    }
    return inv;
}

bool is_identity(const Permutation& w) {
    for (size_t p = 0; p < w.size(); ++p) {
        if (w[p] != static_cast<int>(p)) {
            return false;
        }
    }
    return true;
}

int permutation_length(const Permutation& w) {
    int count = 0;
    for (size_t p = 0; p < w.size(); ++p) {
        for (size_t r = p + 1; r < w.size(); ++r) {
            if (w[p] > w[r]) {
                ++count;
            }
        }
    }
    return count;
}

Permutation word_permutation(const std::vector<int>& word, int m) {
    Permutation result = identity_permutation(m);
    for (int t : word) {
        if (t < 0 || t + 1 >= m) {
            throw Error(ErrorCode::IndexOutOfRange,
                        "crossing index " + std::to_string(t) + " out of range for m = " +
                            std::to_string(m));
        }
        // result * s_t: swap the one-line entries at positions t, t+1.
        std::swap(result[t], result[t + 1]);
    }
    return result;
}

bool is_reduced_word(const std::vector<int>& word, int m) {
    return permutation_length(word_permutation(word, m)) == static_cast<int>(word.size());
}

std::vector<int> canonical_reduced_word(Permutation w) {
    Permutation pos = inverse_permutation(w);
    std::vector<int> word;
    const int m = static_cast<int>(w.size());
    bool progressed = true;
    while (progressed) {
        progressed = false;
        for (int r = 0; r + 1 < m; ++r) {
            if (pos[r] > pos[r + 1]) {
                word.push_back(r);
                // Multiply by s_r on the left: swap the values r and r+1.
                std::swap(w[pos[r]], w[pos[r + 1]]);
                std::swap(pos[r], pos[r + 1]);
                progressed = true;
                break;
            }
        }
    }
    return word;
}

Word apply_permutation(const Permutation& w, const Word& bottom) {
    Word top(bottom.size());
    for (size_t p = 0; p < bottom.size(); ++p) {
        top[w[p]] = bottom[p];
    }
    return top;
}

long long psi_degree(const CartanDatum& d, const Permutation& w, const Word& bottom) {
    long long degree = 0;
    for (size_t p = 0; p < bottom.size(); ++p) {
        for (size_t r = p + 1; r < bottom.size(); ++r) {
            if (w[p] > w[r]) {
                degree -= d.bilinear(bottom[p], bottom[r]);
            }
        }
    }
    return degree;
}

std::vector<Permutation> permutations_mapping(const Word& src, const Word& dst) {
    std::vector<Permutation> result;
    if (src.size() != dst.size()) {
        return result;
    }
    Permutation w = identity_permutation(static_cast<int>(src.size()));
    std::sort(w.begin(), w.end());
    do {
        if (apply_permutation(w, src) == dst) {
            result.push_back(w);
        }
    } while (std::next_permutation(w.begin(), w.end()));
    return result;
}

}  // namespace klrc
