#pragma once

#include <map>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "klrc/errors.hpp"

namespace klrc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/**
 * Integer-coefficient Laurent polynomial in the grading variable q.
 * Terms map exponent -> coefficient; zero coefficients are never stored,
 * so equality of term maps is equality of polynomials.
 */
class LaurentPoly {
public:
    LaurentPoly() = default;

    /** c * q^e */
    static LaurentPoly term(long long exponent, BigInt coefficient);
    static LaurentPoly one() { return term(0, 1); }
    static LaurentPoly q_power(long long exponent) { return term(exponent, 1); }
    static LaurentPoly constant(BigInt c) { return term(0, std::move(c)); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;

    const std::map<long long, BigInt>& terms() const { return terms_; }
    BigInt coefficient(long long exponent) const;

    /** Lowest/highest exponent present; invalid to call on zero. */
    long long min_exponent() const;
    long long max_exponent() const;

    LaurentPoly operator+(const LaurentPoly& other) const;
    LaurentPoly operator-(const LaurentPoly& other) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly& other) const;
    LaurentPoly& operator+=(const LaurentPoly& other);
    LaurentPoly& operator-=(const LaurentPoly& other);
    LaurentPoly& operator*=(const LaurentPoly& other);

    bool operator==(const LaurentPoly& other) const = default;

    /** Multiply by q^r. */
    LaurentPoly shifted(long long r) const;

    /** Bar involution q -> q^{-1}. */
    LaurentPoly bar() const;

    /** Evaluation at q = 1. */
    BigInt eval_at_one() const;

    /**
     * Exact quotient this / divisor; throws NotDivisible (detail carries the
     * remainder) when the division leaves a remainder over Z[q, q^{-1}].
     */
    LaurentPoly divide_exact(const LaurentPoly& divisor) const;

    /** Deterministic rendering, descending exponents, e.g. "q^2+2+q^-2". */
    std::string to_string() const;

private:
    std::map<long long, BigInt> terms_;

    void insert_term(long long exponent, const BigInt& coefficient);
};

/** [n]_i for q_i = q^{d}: q^{d(n-1)} + q^{d(n-3)} + ... + q^{d(1-n)}; [0] = 0. */
LaurentPoly quantum_integer(int d, int n);

/** [n]_i! = [n]_i [n-1]_i ... [1]_i; [0]! = 1. */
LaurentPoly quantum_factorial(int d, int n);

}  // namespace klrc
