#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "klrc/laurent.hpp"

namespace klrc {

// Row space over the rationals in reduced echelon form, keyed by pivot column.
class RowSpace {
  public:
    explicit RowSpace(size_t columns) : columns_(columns) {}

    size_t columns() const { return columns_; }
    size_t rank() const { return pivots_.size(); }
    const std::map<size_t, std::vector<Rational>>& pivot_rows() const { return pivots_; }

    // Reduces the row against the space and inserts the remainder if it is
    // nonzero.  Returns true when the rank grew.
    bool insert(std::vector<Rational> row);

    bool contains(std::vector<Rational> row) const;

  private:
    void reduce(std::vector<Rational>& row) const;

    size_t columns_;
    std::map<size_t, std::vector<Rational>> pivots_;
};

}  // namespace klrc
