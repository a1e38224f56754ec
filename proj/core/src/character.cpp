#include "klrc/character.hpp"

#include <sstream>

namespace klrc {

Character Character::single(RootVector nu, Word word, LaurentPoly coefficient) {
    Character ch(std::move(nu));
    ch.add_term(word, coefficient);
    return ch;
}

LaurentPoly Character::coefficient(const Word& word) const {
    auto it = terms_.find(word);
    return it == terms_.end() ? LaurentPoly{} : it->second;
}

void Character::add_term(const Word& word, const LaurentPoly& coefficient) {
    if (word_content(word, nu_.rank()) != nu_) {
        throw Error(ErrorCode::ContentMismatch, "word content differs from the character's nu");
    }
    if (coefficient.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.emplace(word, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

Character Character::operator+(const Character& other) const {
    if (nu_ != other.nu_) {
        throw Error(ErrorCode::ContentMismatch, "cannot add characters of different content");
    }
    Character result(*this);
    for (const auto& [w, c] : other.terms_) {
        result.add_term(w, c);
    }
    return result;
}

Character Character::operator-(const Character& other) const {
    return *this + other.scaled(-LaurentPoly::one());
}

Character Character::scaled(const LaurentPoly& c) const {
    Character result(nu_);
    for (const auto& [w, coeff] : terms_) {
        result.add_term(w, coeff * c);
    }
    return result;
}

Character Character::shifted(long long r) const {
    Character result(nu_);
    for (const auto& [w, coeff] : terms_) {
        result.add_term(w, coeff.shifted(r));
    }
    return result;
}

Character Character::bar() const {
    Character result(nu_);
    for (const auto& [w, coeff] : terms_) {
        result.add_term(w, coeff.bar());
    }
    return result;
}

std::string Character::to_string(const CartanDatum& d) const {
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    for (const auto& [w, coeff] : terms_) {
        if (!first) {
            out << " + ";
        }
        first = false;
        out << "(" << coeff.to_string() << ")*" << word_to_string(d, w);
    }
    return out.str();
}

namespace {

// Interleaves u[from_u..] with v[from_v..]; a v-letter placed before remaining
// u-letters crosses each of them, contributing -(alpha_u, alpha_v) to the
// q-degree of that shuffle.
void merge_shuffles(const CartanDatum& d, const Word& u, const Word& v, size_t from_u,
                    size_t from_v, Word& current, long long degree, const LaurentPoly& base,
                    Character& out) {
    if (from_u == u.size() && from_v == v.size()) {
        out.add_term(current, base.shifted(degree));
        return;
    }
    if (from_u < u.size()) {
        current.push_back(u[from_u]);
        merge_shuffles(d, u, v, from_u + 1, from_v, current, degree, base, out);
        current.pop_back();
    }
    if (from_v < v.size()) {
        long long crossing = 0;
        for (size_t r = from_u; r < u.size(); ++r) {
            crossing -= d.bilinear(u[r], v[from_v]);
        }
        current.push_back(v[from_v]);
        merge_shuffles(d, u, v, from_u, from_v + 1, current, degree + crossing, base, out);
        current.pop_back();
    }
}

}  // namespace

Character shuffle(const CartanDatum& d, const Character& f, const Character& g) {
    Character result(f.nu() + g.nu());
    for (const auto& [u, cu] : f.terms()) {
        for (const auto& [v, cv] : g.terms()) {
            Word current;
            current.reserve(u.size() + v.size());
            merge_shuffles(d, u, v, 0, 0, current, 0, cu * cv, result);
        }
    }
    return result;
}

Character e_char(const CartanDatum& d, const Character& ch, int i, int r, bool divided) {
    if (r < 0) {
        throw Error(ErrorCode::IndexOutOfRange, "e_char power must be nonnegative");
    }
    if (r == 0) {
        return ch;
    }
    if (ch.nu()[i] < r) {
        throw Error(ErrorCode::ContentMismatch,
                    "content has fewer than " + std::to_string(r) + " letters " + d.label(i));
    }
    std::vector<int> target(ch.nu().coefficients());
    target[i] -= r;
    Character result((RootVector(target)));
    const LaurentPoly factorial = quantum_factorial(d.d(i), r);
    for (const auto& [w, coeff] : ch.terms()) {
        if (suffix_run(w, i) < r) {
            continue;
        }
        Word stripped(w.begin(), w.end() - r);
        result.add_term(stripped, divided ? coeff.divide_exact(factorial) : coeff);
    }
    return result;
}

CharStats char_stats(const CartanDatum& d, const Character& ch, const DominantWeight* lambda) {
    if (ch.is_zero()) {
        throw Error(ErrorCode::ZeroCharacter, "char_stats needs a nonzero character");
    }
    const int n = d.rank();
    CharStats stats;
    stats.eps.assign(n, 0);
    stats.eps_vee.assign(n, 0);
    stats.wt.assign(n, 0);
    stats.jump.assign(n, 0);
    for (int i = 0; i < n; ++i) {
        for (const auto& [w, coeff] : ch.terms()) {
            stats.eps[i] = std::max(stats.eps[i], suffix_run(w, i));
            stats.eps_vee[i] = std::max(stats.eps_vee[i], prefix_run(w, i));
        }
        stats.wt[i] = -pairing(d, i, ch.nu());
        stats.jump[i] = stats.eps[i] + stats.eps_vee[i] + stats.wt[i];
    }
    if (lambda != nullptr) {
        std::vector<long long> phi(n, 0);
        for (int i = 0; i < n; ++i) {
            phi[i] = (*lambda)[i] + stats.eps[i] + stats.wt[i];
        }
        stats.phi_lambda = std::move(phi);
    }
    return stats;
}

Character char_L_im(const CartanDatum& d, int i, int m) {
    std::vector<int> nu(d.rank(), 0);
    nu[i] = m;
    return Character::single(RootVector(nu), Word(m, i), quantum_factorial(d.d(i), m));
}

Character char_simple_ci_j(const CartanDatum& d, int i, int j, int c, int n) {
    if (i == j) {
        throw Error(ErrorCode::IndexOutOfRange, "vertices i and j must differ");
    }
    const int a = static_cast<int>(d.a(i, j));
    if (a == 0 && c != 0) {
        throw Error(ErrorCode::IndexOutOfRange, "a_ij = 0 admits only c = 0");
    }
    if (n < std::max(0, c - a) || n > c) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "n = " + std::to_string(n) + " outside [max(0,c-a), c] for c = " +
                        std::to_string(c) + ", a = " + std::to_string(a));
    }
    if (c <= a) {
        std::vector<int> nu(d.rank(), 0);
        nu[i] = c;
        nu[j] = 1;
        Word w;
        w.insert(w.end(), c - n, i);
        w.push_back(j);
        w.insert(w.end(), n, i);
        return Character::single(RootVector(nu), w,
                                 quantum_factorial(d.d(i), c - n) * quantum_factorial(d.d(i), n));
    }
    Character base = char_simple_ci_j(d, i, j, a, n - (c - a));
    return bar_normalize(shuffle(d, base, char_L_im(d, i, c - a)));
}

Character serre_apply(const CartanDatum& d, const Character& ch, int i, int j, int degree) {
    if (i == j) {
        throw Error(ErrorCode::IndexOutOfRange, "vertices i and j must differ");
    }
    if (degree < 0) {
        throw Error(ErrorCode::IndexOutOfRange, "degree must be nonnegative");
    }
    if (ch.nu()[i] < degree || ch.nu()[j] < 1) {
        throw Error(ErrorCode::ContentMismatch, "character content must contain degree*i + j");
    }
    std::vector<int> target(ch.nu().coefficients());
    target[i] -= degree;
    target[j] -= 1;
    Character result((RootVector(target)));
    for (int r = 0; r <= degree; ++r) {
        Character piece = e_char(d, ch, i, r, true);
        piece = e_char(d, piece, j, 1, false);
        piece = e_char(d, piece, i, degree - r, true);
        result = result + (r % 2 == 0 ? piece : piece.scaled(-LaurentPoly::one()));
    }
    return result;
}

bool equal_up_to_q_power(const Character& f, const Character& g) {
    if (f.nu() != g.nu()) {
        return false;
    }
    if (f.is_zero() || g.is_zero()) {
        return f.is_zero() && g.is_zero();
    }
    const auto& [wf, cf] = *f.terms().begin();
    const auto& [wg, cg] = *g.terms().begin();
    if (wf != wg) {
        return false;
    }
    const long long r = cg.min_exponent() - cf.min_exponent();
    return g == f.shifted(r);
}

Character bar_normalize(const Character& ch) {
    if (ch.is_zero()) {
        return ch;
    }
    const auto& [w, c] = *ch.terms().begin();
    const long long s = c.bar().min_exponent() - c.min_exponent();
    if (ch.bar() != ch.shifted(s)) {
        throw Error(ErrorCode::NotDivisible, "character is not bar-symmetrizable");
    }
    if (s % 2 != 0) {
        throw Error(ErrorCode::NotDivisible, "bar normalization needs a half-integer shift");
    }
    return ch.shifted(s / 2);
}

}  // namespace klrc
