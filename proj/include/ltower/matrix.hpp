#ifndef LTOWER_MATRIX_HPP
#define LTOWER_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "ltower/padic.hpp"

namespace ltower {

// Dense square matrix of exact big integers.
class IntMatrix {
public:
    explicit IntMatrix(std::size_t dim) : dim_(dim), cells_(dim * dim, BigInt(0)) {}

    std::size_t dim() const { return dim_; }

    BigInt& at(std::size_t row, std::size_t col) { return cells_[row * dim_ + col]; }
    const BigInt& at(std::size_t row, std::size_t col) const { return cells_[row * dim_ + col]; }

private:
    std::size_t dim_;
    std::vector<BigInt> cells_;
};

// Determinant by Bareiss fraction-free elimination: every intermediate is an
// exact integer and every division is exact.  Pivots are taken on the
// diagonal in order; a zero pivot throws InternalError, since the intended
// inputs (Laplacian minors of connected graphs) are positive definite.
// The empty matrix has determinant 1.
BigInt bareiss_determinant(IntMatrix m);

} // namespace ltower

#endif
