#include "klrc/klr_algebra.hpp"

#include <algorithm>
#include <cstdlib>

#include "klrc/errors.hpp"

namespace klrc {

void KlrElement::add_term(const PbwMonomial& monomial, const Rational& coefficient) {
    if (coefficient == 0) {
        return;
    }
    auto [it, inserted] = terms_.emplace(monomial, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

KlrElement KlrElement::operator+(const KlrElement& other) const {
    KlrElement result(*this);
    result += other;
    return result;
}

KlrElement KlrElement::operator-(const KlrElement& other) const {
    return *this + other.scaled(Rational(-1));
}

KlrElement KlrElement::scaled(const Rational& c) const {
    KlrElement result(nu_);
    if (c == 0) {
        return result;
    }
    for (const auto& [m, coeff] : terms_) {
        result.terms_.emplace(m, coeff * c);
    }
    return result;
}

KlrElement& KlrElement::operator+=(const KlrElement& other) {
    if (nu_ != other.nu_) {
        throw Error(ErrorCode::ContentMismatch, "cannot add elements of different content");
    }
    for (const auto& [m, coeff] : other.terms_) {
        add_term(m, coeff);
    }
    return *this;
}

RootVector KlrAlgebra::content_of(const Word& word) const {
    return word_content(word, datum_.rank());
}

KlrElement KlrAlgebra::idempotent(const Word& word) const {
    PbwMonomial m{word, {}, std::vector<int>(word.size(), 0)};
    KlrElement e(content_of(word));
    e.add_term(m, Rational(1));
    return e;
}

KlrElement KlrAlgebra::dot_generator(const Word& word, int strand) const {
    if (strand < 0 || strand >= static_cast<int>(word.size())) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "dot strand " + std::to_string(strand) + " out of range");
    }
    PbwMonomial m{word, {}, std::vector<int>(word.size(), 0)};
    m.dot_powers[strand] = 1;
    KlrElement e(content_of(word));
    e.add_term(m, Rational(1));
    return e;
}

KlrElement KlrAlgebra::crossing_generator(const Word& word, int t) const {
    if (t < 0 || t + 1 >= static_cast<int>(word.size())) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "crossing index " + std::to_string(t) + " out of range");
    }
    PbwMonomial m{word, {t}, std::vector<int>(word.size(), 0)};
    KlrElement e(content_of(word));
    e.add_term(m, Rational(1));
    return e;
}

Word KlrAlgebra::top_word(const PbwMonomial& monomial) {
    const int m = static_cast<int>(monomial.src.size());
    return apply_permutation(word_permutation(monomial.psi_word, m), monomial.src);
}

Word KlrAlgebra::local_right_word(const SymbolSeq& seq, size_t from, const Word& src) const {
    std::vector<int> crossings;
    for (size_t p = from; p < seq.size(); ++p) {
        if (!seq[p].is_dot) {
            crossings.push_back(seq[p].index);
        }
    }
    return apply_permutation(word_permutation(crossings, static_cast<int>(src.size())), src);
}

void KlrAlgebra::bring_to_front(WorkItem& item, size_t lo, int t, const Word& src,
                                std::vector<WorkItem>& stack) const {
    SymbolSeq& seq = item.seq;
    const int a = seq[lo].index;
    if (a == t) {
        return;
    }
    bring_to_front(item, lo + 1, t, src, stack);
    if (std::abs(a - t) >= 2) {
        std::swap(seq[lo], seq[lo + 1]);
        return;
    }
    bring_to_front(item, lo + 2, a, src, stack);
    // Pattern (a, t, a) with |a-t| = 1: braid into (t, a, t).  The cubic
    // relation contributes dot corrections when the outer strands carry equal
    // labels; the sum is empty when the middle label coincides as well.
    const Word u = local_right_word(seq, lo + 3, src);
    const int r = std::min(a, t);
    if (u[r] == u[r + 2] && datum_.bilinear(u[r], u[r + 1]) != 0) {
        const long long upper = datum_.a(u[r], u[r + 1]);
        const Rational sign = (a == r) ? Rational(1) : Rational(-1);
        for (long long l = 0; l < upper; ++l) {
            WorkItem correction;
            correction.coeff = item.coeff * sign;
            correction.seq.assign(seq.begin(), seq.begin() + lo);
            for (long long k = 0; k < l; ++k) {
                correction.seq.push_back(Symbol{true, r});
            }
            for (long long k = 0; k < upper - 1 - l; ++k) {
                correction.seq.push_back(Symbol{true, r + 2});
            }
            correction.seq.insert(correction.seq.end(), seq.begin() + lo + 3, seq.end());
            stack.push_back(std::move(correction));
        }
    }
    seq[lo].index = t;
    seq[lo + 1].index = a;
    seq[lo + 2].index = t;
}

void KlrAlgebra::process_item(const Word& src, WorkItem item, std::vector<WorkItem>& stack,
                              std::map<PbwMonomial, Rational>& out) const {
    SymbolSeq& seq = item.seq;
    const int m = static_cast<int>(src.size());

    // Phase 1: slide every dot to the right of every crossing.
    bool moved = true;
    while (moved) {
        moved = false;
        for (size_t p = 0; p + 1 < seq.size(); ++p) {
            if (!seq[p].is_dot || seq[p + 1].is_dot) {
                continue;
            }
            const int s = seq[p].index;
            const int r = seq[p + 1].index;
            const Word u = local_right_word(seq, p + 2, src);
            if (u[r] == u[r + 1] && (s == r || s == r + 1)) {
                WorkItem correction;
                correction.coeff = item.coeff * (s == r ? Rational(1) : Rational(-1));
                correction.seq.assign(seq.begin(), seq.begin() + p);
                correction.seq.insert(correction.seq.end(), seq.begin() + p + 2, seq.end());
                stack.push_back(std::move(correction));
            }
            int slid = s;
            if (s == r) {
                slid = r + 1;
            } else if (s == r + 1) {
                slid = r;
            }
            seq[p] = Symbol{false, r};
            seq[p + 1] = Symbol{true, slid};
            moved = true;
            break;
        }
    }

    // Phase 2: the sequence is now crossings followed by dots.  Repeatedly
    // locate the rightmost letter whose suffix stops being reduced, expose an
    // adjacent equal pair there, and resolve it with the quadratic relation.
    size_t crossing_count = 0;
    while (crossing_count < seq.size() && !seq[crossing_count].is_dot) {
        ++crossing_count;
    }
    auto crossing_word = [&seq](size_t from, size_t to) {
        std::vector<int> w;
        for (size_t p = from; p < to; ++p) {
            w.push_back(seq[p].index);
        }
        return w;
    };
    while (true) {
        size_t reduced_from = crossing_count;
        while (reduced_from > 0 &&
               is_reduced_word(crossing_word(reduced_from - 1, crossing_count), m)) {
            --reduced_from;
        }
        if (reduced_from == 0) {
            break;
        }
        const int t = seq[reduced_from - 1].index;
        bring_to_front(item, reduced_from, t, src, stack);
        const Word u = local_right_word(seq, reduced_from + 1, src);
        if (u[t] == u[t + 1]) {
            return;  // psi^2 = 0: the item vanishes
        }
        if (datum_.bilinear(u[t], u[t + 1]) == 0) {
            seq.erase(seq.begin() + reduced_from - 1, seq.begin() + reduced_from + 1);
            crossing_count -= 2;
            continue;
        }
        const long long power_left = datum_.a(u[t], u[t + 1]);
        const long long power_right = datum_.a(u[t + 1], u[t]);
        for (int variant = 0; variant < 2; ++variant) {
            WorkItem split;
            split.coeff = item.coeff;
            split.seq.assign(seq.begin(), seq.begin() + reduced_from - 1);
            const long long power = (variant == 0) ? power_left : power_right;
            const int strand = (variant == 0) ? t : t + 1;
            for (long long k = 0; k < power; ++k) {
                split.seq.push_back(Symbol{true, strand});
            }
            split.seq.insert(split.seq.end(), seq.begin() + reduced_from + 1, seq.end());
            stack.push_back(std::move(split));
        }
        return;
    }

    // Phase 3: the crossing word is reduced; rewrite it into the canonical
    // reduced word, then read off the basis monomial.
    const std::vector<int> canonical =
        canonical_reduced_word(word_permutation(crossing_word(0, crossing_count), m));
    for (size_t idx = 0; idx < canonical.size(); ++idx) {
        if (seq[idx].index != canonical[idx]) {
            bring_to_front(item, idx, canonical[idx], src, stack);
        }
    }
    PbwMonomial monomial{src, canonical, std::vector<int>(src.size(), 0)};
    for (size_t p = crossing_count; p < seq.size(); ++p) {
        ++monomial.dot_powers[seq[p].index];
    }
    auto [it, inserted] = out.emplace(std::move(monomial), item.coeff);
    if (!inserted) {
        it->second += item.coeff;
        if (it->second == 0) {
            out.erase(it);
        }
    }
}

KlrElement KlrAlgebra::normalize(const Word& src, SymbolSeq seq, Rational coeff) const {
    std::vector<WorkItem> stack;
    stack.push_back(WorkItem{std::move(coeff), std::move(seq)});
    std::map<PbwMonomial, Rational> out;
    while (!stack.empty()) {
        WorkItem item = std::move(stack.back());
        stack.pop_back();
        process_item(src, std::move(item), stack, out);
    }
    KlrElement result(content_of(src));
    for (const auto& [m, c] : out) {
        result.add_term(m, c);
    }
    return result;
}

KlrElement KlrAlgebra::psi_times_monomial(int t, const PbwMonomial& monomial) const {
    const auto key = std::make_pair(t, monomial);
    auto cached = psi_cache_.find(key);
    if (cached != psi_cache_.end()) {
        return cached->second;
    }
    SymbolSeq seq;
    seq.push_back(Symbol{false, t});
    for (int letter : monomial.psi_word) {
        seq.push_back(Symbol{false, letter});
    }
    for (size_t r = 0; r < monomial.dot_powers.size(); ++r) {
        for (int k = 0; k < monomial.dot_powers[r]; ++k) {
            seq.push_back(Symbol{true, static_cast<int>(r)});
        }
    }
    KlrElement result = normalize(monomial.src, std::move(seq), Rational(1));
    psi_cache_.emplace(key, result);
    return result;
}

KlrElement KlrAlgebra::dot_times_monomial(int strand, const PbwMonomial& monomial) const {
    const auto key = std::make_pair(strand, monomial);
    auto cached = dot_cache_.find(key);
    if (cached != dot_cache_.end()) {
        return cached->second;
    }
    SymbolSeq seq;
    seq.push_back(Symbol{true, strand});
    for (int letter : monomial.psi_word) {
        seq.push_back(Symbol{false, letter});
    }
    for (size_t r = 0; r < monomial.dot_powers.size(); ++r) {
        for (int k = 0; k < monomial.dot_powers[r]; ++k) {
            seq.push_back(Symbol{true, static_cast<int>(r)});
        }
    }
    KlrElement result = normalize(monomial.src, std::move(seq), Rational(1));
    dot_cache_.emplace(key, result);
    return result;
}

KlrElement KlrAlgebra::left_dot(int strand, const KlrElement& a) const {
    KlrElement result(a.nu());
    for (const auto& [m, c] : a.terms()) {
        result += dot_times_monomial(strand, m).scaled(c);
    }
    return result;
}

KlrElement KlrAlgebra::left_crossing(int t, const KlrElement& a) const {
    KlrElement result(a.nu());
    for (const auto& [m, c] : a.terms()) {
        result += psi_times_monomial(t, m).scaled(c);
    }
    return result;
}

KlrElement KlrAlgebra::right_dot(const KlrElement& a, int strand) const {
    KlrElement result(a.nu());
    for (const auto& [m, c] : a.terms()) {
        PbwMonomial bumped = m;
        ++bumped.dot_powers[strand];
        result.add_term(bumped, c);
    }
    return result;
}

KlrElement KlrAlgebra::right_crossing(const KlrElement& a, int t) const {
    KlrElement result(a.nu());
    for (const auto& [m, c] : a.terms()) {
        const auto key = std::make_pair(t, m);
        auto cached = right_psi_cache_.find(key);
        if (cached == right_psi_cache_.end()) {
            // m * psi_t = psi_w x^a psi_t 1_j with j = s_t(src): appending the
            // crossing after the dots leaves the dot indexing on src intact.
            SymbolSeq seq;
            for (int letter : m.psi_word) {
                seq.push_back(Symbol{false, letter});
            }
            for (size_t r = 0; r < m.dot_powers.size(); ++r) {
                for (int k = 0; k < m.dot_powers[r]; ++k) {
                    seq.push_back(Symbol{true, static_cast<int>(r)});
                }
            }
            seq.push_back(Symbol{false, t});
            Word bottom = m.src;
            if (t < 0 || t + 1 >= static_cast<int>(bottom.size())) {
                throw Error(ErrorCode::IndexOutOfRange,
                            "crossing index " + std::to_string(t) + " out of range");
            }
            std::swap(bottom[t], bottom[t + 1]);
            cached = right_psi_cache_
                         .emplace(key, normalize(bottom, std::move(seq), Rational(1)))
                         .first;
        }
        result += cached->second.scaled(c);
    }
    return result;
}

KlrElement KlrAlgebra::multiply(const KlrElement& a, const KlrElement& b) const {
    if (a.nu() != b.nu()) {
        throw Error(ErrorCode::ContentMismatch, "cannot multiply elements of different content");
    }
    KlrElement result(a.nu());
    for (const auto& [mb, cb] : b.terms()) {
        const Word top_b = top_word(mb);
        for (const auto& [ma, ca] : a.terms()) {
            if (ma.src != top_b) {
                continue;
            }
            KlrElement partial(a.nu());
            partial.add_term(mb, Rational(1));
            for (size_t s = 0; s < ma.dot_powers.size(); ++s) {
                for (int k = 0; k < ma.dot_powers[s]; ++k) {
                    partial = left_dot(static_cast<int>(s), partial);
                }
            }
            for (auto it = ma.psi_word.rbegin(); it != ma.psi_word.rend(); ++it) {
                partial = left_crossing(*it, partial);
            }
            result += partial.scaled(ca * cb);
        }
    }
    return result;
}

KlrElement KlrAlgebra::sigma(const KlrElement& a) const {
    KlrElement result(a.nu());
    for (const auto& [monomial, c] : a.terms()) {
        const int m = static_cast<int>(monomial.src.size());
        int equal_label_crossings = 0;
        for (size_t j = 0; j < monomial.psi_word.size(); ++j) {
            const std::vector<int> suffix(monomial.psi_word.begin() + j + 1,
                                          monomial.psi_word.end());
            const Word u = apply_permutation(word_permutation(suffix, m), monomial.src);
            const int t = monomial.psi_word[j];
            if (u[t] == u[t + 1]) {
                ++equal_label_crossings;
            }
        }
        SymbolSeq seq;
        for (int t : monomial.psi_word) {
            seq.push_back(Symbol{false, m - 2 - t});
        }
        for (size_t r = 0; r < monomial.dot_powers.size(); ++r) {
            for (int k = 0; k < monomial.dot_powers[r]; ++k) {
                seq.push_back(Symbol{true, m - 1 - static_cast<int>(r)});
            }
        }
        Word mirrored(monomial.src.rbegin(), monomial.src.rend());
        const Rational coeff = (equal_label_crossings % 2 == 0) ? c : -c;
        result += normalize(mirrored, std::move(seq), coeff);
    }
    return result;
}

long long KlrAlgebra::monomial_degree(const PbwMonomial& monomial) const {
    const int m = static_cast<int>(monomial.src.size());
    long long degree = psi_degree(datum_, word_permutation(monomial.psi_word, m), monomial.src);
    for (size_t r = 0; r < monomial.dot_powers.size(); ++r) {
        degree += static_cast<long long>(monomial.dot_powers[r]) *
                  datum_.bilinear(monomial.src[r], monomial.src[r]);
    }
    return degree;
}

std::optional<long long> KlrAlgebra::homogeneous_degree(const KlrElement& a) const {
    std::optional<long long> degree;
    for (const auto& [m, c] : a.terms()) {
        const long long d = monomial_degree(m);
        if (!degree) {
            degree = d;
        } else if (*degree != d) {
            return std::nullopt;
        }
    }
    return degree;
}

namespace {

void enumerate_dot_vectors(const CartanDatum& d, const Word& src, size_t r, long long remaining,
                           std::vector<int>& current, std::vector<std::vector<int>>& out) {
    if (r == src.size()) {
        if (remaining == 0) {
            out.push_back(current);
        }
        return;
    }
    const long long b = d.bilinear(src[r], src[r]);
    for (long long k = 0; k * b <= remaining; ++k) {
        current[r] = static_cast<int>(k);
        enumerate_dot_vectors(d, src, r + 1, remaining - k * b, current, out);
    }
    current[r] = 0;
}

LaurentPoly truncate_above(const LaurentPoly& p, long long max_degree) {
    LaurentPoly result;
    for (const auto& [e, c] : p.terms()) {
        if (e <= max_degree) {
            result += LaurentPoly::term(e, c);
        }
    }
    return result;
}

}  // namespace

std::vector<PbwMonomial> KlrAlgebra::basis_in_degree(const Word& src, const Word& dst,
                                                     long long degree) const {
    std::vector<PbwMonomial> basis;
    for (const Permutation& w : permutations_mapping(src, dst)) {
        const long long base = psi_degree(datum_, w, src);
        const long long remaining = degree - base;
        if (remaining < 0) {
            continue;
        }
        std::vector<std::vector<int>> dot_vectors;
        std::vector<int> current(src.size(), 0);
        enumerate_dot_vectors(datum_, src, 0, remaining, current, dot_vectors);
        const std::vector<int> canonical = canonical_reduced_word(w);
        for (auto& dots : dot_vectors) {
            basis.push_back(PbwMonomial{src, canonical, std::move(dots)});
        }
    }
    std::sort(basis.begin(), basis.end());
    return basis;
}

LaurentPoly KlrAlgebra::graded_dim_series(const Word& src, const Word& dst,
                                          long long max_degree) const {
    LaurentPoly result;
    for (const Permutation& w : permutations_mapping(src, dst)) {
        LaurentPoly term = LaurentPoly::q_power(psi_degree(datum_, w, src));
        for (size_t r = 0; r < src.size() && !term.is_zero(); ++r) {
            const long long b = datum_.bilinear(src[r], src[r]);
            LaurentPoly geometric;
            for (long long k = 0; term.min_exponent() + k * b <= max_degree; ++k) {
                geometric += LaurentPoly::q_power(k * b);
            }
            term = truncate_above(term * geometric, max_degree);
        }
        result += term;
    }
    return truncate_above(result, max_degree);
}

}  // namespace klrc
