#ifndef LTOWER_CHEBYSHEV_HPP
#define LTOWER_CHEBYSHEV_HPP

#include <optional>
#include <vector>

#include "ltower/padic.hpp"
#include "ltower/seeds.hpp"

namespace ltower {

// Polynomial with exact integer coefficients and zero constant term;
// coeff[k] multiplies T^k.
struct IntPolynomial {
    std::vector<BigInt> coeff;

    std::size_t degree() const { return coeff.empty() ? 0 : coeff.size() - 1; }
    BigInt at(std::size_t k) const { return k < coeff.size() ? coeff[k] : BigInt(0); }
};

// The degree-a shifted Chebyshev polynomial built from its defining
// recurrence.  Quadratic in a; kept as the independent cross-check for the
// closed coefficient formula.
IntPolynomial shifted_chebyshev_recurrence(unsigned a);

// Closed form for the T^k coefficient of the degree-n shifted Chebyshev
// polynomial: (-1)^(k-1) binom(n+k-1, 2k-1) n/k for k <= n, else 0.
// Exact for any n >= 0.
BigInt shifted_chebyshev_coeff(const BigInt& n, unsigned k);

// The same coefficient extended l-adically to any a in Z_l, computed from
// the falling-factorial product a*(a+k-1)(a+k-2)...(a-k+1) in modular
// arithmetic.  Dividing out (2k-1)!*k costs exactly
// coeff_precision_loss(prime, k) digits of precision.
PadicInt shifted_chebyshev_coeff_padic(const PadicInt& a, unsigned k);

// ord_l((2k-1)! * k), by Legendre's formula.
unsigned coeff_precision_loss(unsigned long prime, unsigned k);

// Working-precision buffer needed so that every coefficient 1..terms comes
// out with at least the target precision: max_k coeff_precision_loss.
unsigned series_precision_buffer(unsigned long prime, unsigned terms);

// Truncated power series over Z_l; coeff[i] multiplies T^(i+1) and carries
// its own precision.  When every seed is an integer the coefficients are
// also known exactly, which lets invariant extraction certify valuations
// beyond the display precision.
struct PadicSeries {
    unsigned long prime;
    std::vector<PadicInt> coeff;
    std::optional<std::vector<BigInt>> exact;

    unsigned terms() const { return static_cast<unsigned>(coeff.size()); }

    // 1-based: c(k) multiplies T^k.
    const PadicInt& c(unsigned k) const { return coeff.at(k - 1); }
};

// The power series attached to a single seed, truncated after `terms`
// coefficients, each certified to at least `precision` digits.
PadicSeries seed_series(const Seed& seed, unsigned long prime, unsigned terms,
                        unsigned precision);

// Sum of the per-seed series: the series whose coefficient valuations drive
// the tower growth law.  Requires a unit seed.
PadicSeries tower_series(const SeedSpec& spec, unsigned terms, unsigned precision);

} // namespace ltower

#endif
