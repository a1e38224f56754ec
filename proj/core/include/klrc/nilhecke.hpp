#pragma once

#include <map>
#include <string>
#include <vector>

#include "klrc/laurent.hpp"

namespace klrc {

// Polynomial in a fixed number of commuting variables with rational
// coefficients, the carrier of the faithful one-vertex representation:
// x_r acts by multiplication and psi_r by the divided difference
// (f - s_r f)/(x_r - x_{r+1}).
class NilPolynomial {
  public:
    explicit NilPolynomial(int vars) : vars_(vars) {}

    static NilPolynomial one(int vars);
    static NilPolynomial variable(int vars, int r);

    int vars() const { return vars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::vector<int>, Rational>& terms() const { return terms_; }

    void add_term(const std::vector<int>& exponents, const Rational& coefficient);

    NilPolynomial operator+(const NilPolynomial& other) const;
    NilPolynomial operator-(const NilPolynomial& other) const;
    NilPolynomial operator*(const NilPolynomial& other) const;

    bool operator==(const NilPolynomial&) const = default;

    NilPolynomial swapped(int r) const;
    NilPolynomial divided_difference(int r) const;

    std::string to_string() const;

  private:
    int vars_;
    std::map<std::vector<int>, Rational> terms_;
};

struct NilHeckeGenerator {
    bool is_dot;
    int index;
};

// Applies the generator word to f; the rightmost generator acts first.
NilPolynomial nilhecke_apply(const NilPolynomial& f,
                             const std::vector<NilHeckeGenerator>& word);

}  // namespace klrc
