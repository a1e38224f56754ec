#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "klrc/cartan.hpp"
#include "klrc/laurent.hpp"
#include "klrc/permutation.hpp"
#include "klrc/word.hpp"

namespace klrc {

// Basis monomial psi_w x^a 1_src: the crossing element of the canonical
// reduced word of w, times dots on the bottom strands, times the idempotent
// of `src`.  The top word is obtained by letting w act on `src`.
struct PbwMonomial {
    Word src;
    std::vector<int> psi_word;    // canonical (lexicographically least) reduced word
    std::vector<int> dot_powers;  // one exponent per bottom strand

    auto operator<=>(const PbwMonomial&) const = default;
};

// Finite linear combination of basis monomials of one content, with exact
// rational coefficients.  A zero element still remembers its content.
class KlrElement {
  public:
    explicit KlrElement(RootVector nu) : nu_(std::move(nu)) {}

    const RootVector& nu() const { return nu_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<PbwMonomial, Rational>& terms() const { return terms_; }

    void add_term(const PbwMonomial& monomial, const Rational& coefficient);

    KlrElement operator+(const KlrElement& other) const;
    KlrElement operator-(const KlrElement& other) const;
    KlrElement scaled(const Rational& c) const;
    KlrElement& operator+=(const KlrElement& other);

    bool operator==(const KlrElement&) const = default;

  private:
    RootVector nu_;
    std::map<PbwMonomial, Rational> terms_;
};

// Arithmetic context for the algebras R(nu) attached to one Cartan datum.
class KlrAlgebra {
  public:
    explicit KlrAlgebra(CartanDatum datum) : datum_(std::move(datum)) {}

    const CartanDatum& datum() const { return datum_; }

    RootVector content_of(const Word& word) const;

    KlrElement zero(const RootVector& nu) const { return KlrElement(nu); }
    KlrElement idempotent(const Word& word) const;
    KlrElement dot_generator(const Word& word, int strand) const;
    KlrElement crossing_generator(const Word& word, int t) const;

    static Word top_word(const PbwMonomial& monomial);

    KlrElement multiply(const KlrElement& a, const KlrElement& b) const;
    KlrElement left_dot(int strand, const KlrElement& a) const;
    KlrElement left_crossing(int t, const KlrElement& a) const;
    KlrElement right_dot(const KlrElement& a, int strand) const;
    KlrElement right_crossing(const KlrElement& a, int t) const;

    // Mirror involution: reverses words, maps x_r to x_{m-1-r} and psi_t to
    // psi_{m-2-t}, with a sign for every crossing of equally labelled strands.
    KlrElement sigma(const KlrElement& a) const;

    long long monomial_degree(const PbwMonomial& monomial) const;

    // Degree if every monomial has the same one; nullopt for zero or mixed.
    std::optional<long long> homogeneous_degree(const KlrElement& a) const;

    // All basis monomials of 1_dst R(nu) 1_src in the given degree.
    std::vector<PbwMonomial> basis_in_degree(const Word& src, const Word& dst,
                                             long long degree) const;

    // Graded dimension of 1_dst R(nu) 1_src with exponents cut at max_degree.
    LaurentPoly graded_dim_series(const Word& src, const Word& dst,
                                  long long max_degree) const;

  private:
    struct Symbol {
        bool is_dot;
        int index;
    };
    using SymbolSeq = std::vector<Symbol>;
    struct WorkItem {
        Rational coeff;
        SymbolSeq seq;
    };

    KlrElement normalize(const Word& src, SymbolSeq seq, Rational coeff) const;
    void process_item(const Word& src, WorkItem item, std::vector<WorkItem>& stack,
                      std::map<PbwMonomial, Rational>& out) const;
    Word local_right_word(const SymbolSeq& seq, size_t from, const Word& src) const;
    // Transforms the all-crossing subrange starting at `lo` so that its first
    // letter becomes t (a left descent of the subrange's permutation), emitting
    // braid-correction items onto the stack.
    void bring_to_front(WorkItem& item, size_t lo, int t, const Word& src,
                        std::vector<WorkItem>& stack) const;

    KlrElement psi_times_monomial(int t, const PbwMonomial& monomial) const;
    KlrElement dot_times_monomial(int strand, const PbwMonomial& monomial) const;

    CartanDatum datum_;
    mutable std::map<std::pair<int, PbwMonomial>, KlrElement> psi_cache_;
    mutable std::map<std::pair<int, PbwMonomial>, KlrElement> dot_cache_;
    mutable std::map<std::pair<int, PbwMonomial>, KlrElement> right_psi_cache_;
};

}  // namespace klrc
