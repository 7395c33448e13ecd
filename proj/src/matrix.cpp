#include "ltower/matrix.hpp"

namespace ltower {

BigInt bareiss_determinant(IntMatrix m) {
    const std::size_t n = m.dim();
    if (n == 0)
        return BigInt(1);

    BigInt prev_pivot(1);
    BigInt t;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        const BigInt& pivot = m.at(k, k);
        if (pivot == 0)
            throw InternalError("zero pivot at step " + std::to_string(k) +
                                " of fraction-free elimination");
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                t = m.at(i, j) * pivot - m.at(i, k) * m.at(k, j);
                mpz_divexact(m.at(i, j).get_mpz_t(), t.get_mpz_t(), prev_pivot.get_mpz_t());
            }
            m.at(i, k) = 0;
        }
        prev_pivot = pivot;
    }
    return m.at(n - 1, n - 1);
}

} // namespace ltower
