#pragma once

#include <string>
#include <utility>
#include <vector>

#include "klrc/errors.hpp"
#include "klrc/laurent.hpp"

namespace klrc {

/**
 * Cartan datum: vertex labels I together with the symmetric bilinear form
 * b[i][j] = (alpha_i, alpha_j).  Validated invariants:
 *   - b[i][i] is a positive even integer,
 *   - b[i][j] = b[j][i] <= 0 for i != j,
 *   - 2*b[i][j] is divisible by b[i][i] (so <h_i, alpha_j> is an integer).
 * The derived pairing table <h_i, alpha_j> = 2 b[i][j] / b[i][i] is cached.
 */
class CartanDatum {
public:
    /** Empty rank-0 datum; real data comes from validate(). */
    CartanDatum() = default;

    /** Validates and constructs; throws Error naming the offending entry. */
    static CartanDatum validate(std::vector<std::string> labels,
                                std::vector<std::vector<long long>> bilinear);

    int rank() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int i) const { return labels_.at(i); }

    /** Index of a label; throws UnknownVertex. */
    int index_of(const std::string& label) const;

    /** (alpha_i, alpha_j) */
    long long bilinear(int i, int j) const { return bform_[i][j]; }

    /** <h_i, alpha_j> */
    long long cartan_pairing(int i, int j) const { return pairing_[i][j]; }

    /** a_ij = -<h_i, alpha_j> for i != j; nonnegative by the axioms. */
    long long a(int i, int j) const { return -pairing_[i][j]; }

    /** d_i = (alpha_i, alpha_i)/2, so q_i = q^{d_i}. */
    int d(int i) const { return static_cast<int>(bform_[i][i] / 2); }

    bool operator==(const CartanDatum& other) const = default;

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<long long>> bform_;
    std::vector<std::vector<long long>> pairing_;
};

/**
 * Element nu of N[I]: nonnegative coefficients in the simple roots, aligned
 * with the datum's label order.
 */
class RootVector {
public:
    RootVector() = default;
    explicit RootVector(std::vector<int> coefficients);

    static RootVector zero(int rank) { return RootVector(std::vector<int>(rank, 0)); }

    int rank() const { return static_cast<int>(coeffs_.size()); }
    int operator[](int i) const { return coeffs_.at(i); }
    const std::vector<int>& coefficients() const { return coeffs_; }

    /** |nu| = sum of coefficients. */
    int height() const;
    bool is_zero() const { return height() == 0; }

    RootVector operator+(const RootVector& other) const;
    RootVector plus_alpha(int i) const;

    auto operator<=>(const RootVector& other) const = default;

private:
    std::vector<int> coeffs_;
};

/** Dominant integral weight Lambda = sum lambda_i Lambda_i, lambda_i >= 0. */
class DominantWeight {
public:
    DominantWeight() = default;
    explicit DominantWeight(std::vector<int> coefficients);

    int rank() const { return static_cast<int>(coeffs_.size()); }
    int operator[](int i) const { return coeffs_.at(i); }
    const std::vector<int>& coefficients() const { return coeffs_; }

    auto operator<=>(const DominantWeight& other) const = default;

private:
    std::vector<int> coeffs_;
};

/** <h_i, nu> for nu in the root lattice. */
long long pairing(const CartanDatum& d, int i, const RootVector& nu);

/** <h_i, Lambda> = lambda_i. */
long long pairing(const CartanDatum& d, int i, const DominantWeight& lambda);

/** <h_i, Lambda - nu>; Lambda may be absent (weight -nu). */
long long weight_pairing(const CartanDatum& d, int i, const DominantWeight* lambda,
                         const RootVector& nu);

/** ([n]_i, [n]_i!) for vertex i. */
std::pair<LaurentPoly, LaurentPoly> quantum_numbers(const CartanDatum& d, int i, int n);

}  // namespace klrc
