#include "klrc/cartan.hpp"

#include <numeric>

namespace klrc {

namespace {

std::string entry_name(const std::vector<std::string>& labels, int i, int j) {
    return "(" + labels[i] + "," + labels[j] + ")";
}

}  // namespace

CartanDatum CartanDatum::validate(std::vector<std::string> labels,
                                  std::vector<std::vector<long long>> bilinear) {
    const int n = static_cast<int>(labels.size());
    if (static_cast<int>(bilinear.size()) != n) {
        throw Error(ErrorCode::UsageError, "bilinear form must be a square matrix matching the label count");
    }
    for (const auto& row : bilinear) {
        if (static_cast<int>(row.size()) != n) {
            throw Error(ErrorCode::UsageError, "bilinear form must be a square matrix matching the label count");
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < i; ++j) {
            if (bilinear[i][j] != bilinear[j][i]) {
                throw Error(ErrorCode::NonSymmetric, "entry " + entry_name(labels, i, j));
            }
        }
    }
    for (int i = 0; i < n; ++i) {
        if (bilinear[i][i] <= 0 || bilinear[i][i] % 2 != 0) {
            throw Error(ErrorCode::DiagonalNotPositiveEven, "entry " + entry_name(labels, i, i));
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i != j && bilinear[i][j] > 0) {
                throw Error(ErrorCode::OffDiagonalPositive, "entry " + entry_name(labels, i, j));
            }
        }
    }
    CartanDatum d;
    d.pairing_.assign(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const long long num = 2 * bilinear[i][j];
            if (num % bilinear[i][i] != 0) {
                throw Error(ErrorCode::DivisibilityFailure, "entry " + entry_name(labels, i, j));
            }
            d.pairing_[i][j] = num / bilinear[i][i];
        }
    }
    d.labels_ = std::move(labels);
    d.bform_ = std::move(bilinear);
    return d;
}

int CartanDatum::index_of(const std::string& label) const {
    for (int i = 0; i < rank(); ++i) {
        if (labels_[i] == label) {
            return i;
        }
    }
    throw Error(ErrorCode::UnknownVertex, "label " + label);
}

RootVector::RootVector(std::vector<int> coefficients) : coeffs_(std::move(coefficients)) {
    for (int c : coeffs_) {
        if (c < 0) {
            throw Error(ErrorCode::UsageError, "root vector coefficients must be nonnegative");
        }
    }
}

int RootVector::height() const {
    return std::accumulate(coeffs_.begin(), coeffs_.end(), 0);
}

RootVector RootVector::operator+(const RootVector& other) const {
    std::vector<int> sum(coeffs_);
    for (int i = 0; i < other.rank(); ++i) {
        sum.at(i) += other[i];
    }
    return RootVector(sum);
}

RootVector RootVector::plus_alpha(int i) const {
    std::vector<int> sum(coeffs_);
    sum.at(i) += 1;
    return RootVector(sum);
}

DominantWeight::DominantWeight(std::vector<int> coefficients) : coeffs_(std::move(coefficients)) {
    for (int c : coeffs_) {
        if (c < 0) {
            throw Error(ErrorCode::UsageError, "dominant weight coefficients must be nonnegative");
        }
    }
}

long long pairing(const CartanDatum& d, int i, const RootVector& nu) {
    if (i < 0 || i >= d.rank()) {
        throw Error(ErrorCode::UnknownVertex, "vertex index " + std::to_string(i));
    }
    long long sum = 0;
    for (int j = 0; j < nu.rank(); ++j) {
        sum += static_cast<long long>(nu[j]) * d.cartan_pairing(i, j);
    }
    return sum;
}

long long pairing(const CartanDatum& d, int i, const DominantWeight& lambda) {
    if (i < 0 || i >= d.rank()) {
        throw Error(ErrorCode::UnknownVertex, "vertex index " + std::to_string(i));
    }
    return lambda[i];
}

long long weight_pairing(const CartanDatum& d, int i, const DominantWeight* lambda,
                         const RootVector& nu) {
    long long value = -pairing(d, i, nu);
    if (lambda != nullptr) {
        value += pairing(d, i, *lambda);
    }
    return value;
}

std::pair<LaurentPoly, LaurentPoly> quantum_numbers(const CartanDatum& d, int i, int n) {
    if (i < 0 || i >= d.rank()) {
        throw Error(ErrorCode::UnknownVertex, "vertex index " + std::to_string(i));
    }
    return {quantum_integer(d.d(i), n), quantum_factorial(d.d(i), n)};
}

}  // namespace klrc
