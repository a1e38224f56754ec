#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "klrc/cartan.hpp"
#include "klrc/laurent.hpp"
#include "klrc/word.hpp"

namespace klrc {

/**
 * Character: finitely supported map from words of one content nu to Laurent
 * polynomials.  The zero character is represented explicitly (empty term map
 * with recorded content) so operator pipelines compose.
 */
class Character {
public:
    Character() = default;
    explicit Character(RootVector nu) : nu_(std::move(nu)) {}

    static Character single(RootVector nu, Word word, LaurentPoly coefficient);

    const RootVector& nu() const { return nu_; }
    const std::map<Word, LaurentPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    LaurentPoly coefficient(const Word& word) const;

    /** Adds c * word; checks the word's content; drops vanishing terms. */
    void add_term(const Word& word, const LaurentPoly& coefficient);

    Character operator+(const Character& other) const;
    Character operator-(const Character& other) const;
    Character scaled(const LaurentPoly& c) const;
    Character shifted(long long r) const;
    Character bar() const;

    bool operator==(const Character& other) const = default;

    std::string to_string(const CartanDatum& d) const;

private:
    RootVector nu_;
    std::map<Word, LaurentPoly> terms_;
};

/**
 * Quantum shuffle product.  Words of f keep their order, words of g keep
 * theirs; every interleaving contributes q^{deg} where deg sums
 * -(alpha_{i_r}, alpha_{j_s}) over pairs that cross (a g-letter placed before
 * an f-letter).  Equals the character of the induced module.
 */
Character shuffle(const CartanDatum& d, const Character& f, const Character& g);

/**
 * Character-level operator e_i^r (suffix convention): keeps words ending in
 * i^r and strips that suffix.  With divided = true the result is divided
 * exactly by [r]_i!; failure to divide throws NotDivisible.
 */
Character e_char(const CartanDatum& d, const Character& ch, int i, int r, bool divided = false);

/** Statistics read off a simple module's character. */
struct CharStats {
    std::vector<int> eps;                       // eps_i: maximal word suffix i^n
    std::vector<int> eps_vee;                   // eps_i^vee: maximal word prefix i^n
    std::vector<long long> wt;                  // wt_i = <h_i, -nu>
    std::vector<long long> jump;                // eps_i + eps_i^vee + wt_i
    std::optional<std::vector<long long>> phi_lambda;  // lambda_i + eps_i + wt_i
};

/** Throws ZeroCharacter on the zero character. */
CharStats char_stats(const CartanDatum& d, const Character& ch,
                     const DominantWeight* lambda = nullptr);

/** ch L(i^m) = [m]_i! i^m. */
Character char_L_im(const CartanDatum& d, int i, int m);

/**
 * Character of the simple module with content c*i + j and eps_i = n.
 * For c <= a_ij it is [c-n]_i! [n]_i! i^{c-n} j i^n; for c > a_ij it is the
 * shuffle of the c = a case with ch L(i^{c-a}), normalized bar-symmetrically.
 * Valid range: max(0, c-a) <= n <= c; otherwise IndexOutOfRange.
 */
Character char_simple_ci_j(const CartanDatum& d, int i, int j, int c, int n);

/**
 * Applies sum_{r=0}^{degree} (-1)^r e_i^{(degree-r)} e_j e_i^{(r)} to ch.
 * At degree a_ij + 1 this is the Serre relation operator.
 */
Character serre_apply(const CartanDatum& d, const Character& ch, int i, int j, int degree);

/** True when g = q^r f for a single overall integer power r. */
bool equal_up_to_q_power(const Character& f, const Character& g);

/**
 * The unique bar-symmetric multiple q^t ch (integer t); throws NotDivisible
 * when no integral normalization exists or bar(ch) is not proportional to ch.
 */
Character bar_normalize(const Character& ch);

}  // namespace klrc
