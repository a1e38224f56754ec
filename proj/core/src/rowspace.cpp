#include "klrc/rowspace.hpp"

#include "klrc/errors.hpp"

namespace klrc {

void RowSpace::reduce(std::vector<Rational>& row) const {
    for (const auto& [pivot, pivot_row] : pivots_) {
        const Rational factor = row[pivot];
        if (factor == 0) {
            continue;
        }
        for (size_t c = pivot; c < columns_; ++c) {
            row[c] -= factor * pivot_row[c];
        }
    }
}

bool RowSpace::insert(std::vector<Rational> row) {
    if (row.size() != columns_) {
        throw Error(ErrorCode::UsageError, "row length does not match column count");
    }
    reduce(row);
    size_t pivot = columns_;
    for (size_t c = 0; c < columns_; ++c) {
        if (row[c] != 0) {
            pivot = c;
            break;
        }
    }
    if (pivot == columns_) {
        return false;
    }
    const Rational lead = row[pivot];
    for (size_t c = pivot; c < columns_; ++c) {
        row[c] /= lead;
    }
    // Keep the basis fully reduced: clear this pivot column in existing rows.
    for (auto& [p, existing] : pivots_) {
        const Rational factor = existing[pivot];
        if (factor == 0) {
            continue;
        }
        for (size_t c = pivot; c < columns_; ++c) {
            existing[c] -= factor * row[c];
        }
    }
    pivots_.emplace(pivot, std::move(row));
    return true;
}

bool RowSpace::contains(std::vector<Rational> row) const {
    if (row.size() != columns_) {
        throw Error(ErrorCode::UsageError, "row length does not match column count");
    }
    reduce(row);
    for (const Rational& value : row) {
        if (value != 0) {
            return false;
        }
    }
    return true;
}

}  // namespace klrc
