#ifndef LTOWER_INVARIANTS_HPP
#define LTOWER_INVARIANTS_HPP

#include <optional>

#include "ltower/chebyshev.hpp"

namespace ltower {

// Iwasawa invariants read off a truncated series.  lambda is always odd and
// equals 2*k0 - 1, where k0 is the first coefficient index attaining the
// minimal valuation mu.  provisional means truncation or finite precision
// could still invalidate the pair; nu is known only on the fast path.
struct InvariantResult {
    unsigned mu = 0;
    unsigned lambda = 1;
    unsigned k0 = 1;
    bool provisional = false;
    unsigned n0_bound = 0;
    std::optional<long long> nu;
};

// mu = min exact coefficient valuation, k0 = first index attaining it.
// A unit coefficient pins mu = 0 with certainty (valuations cannot go
// lower); any other outcome stays provisional unless the series is an
// exactly-known polynomial.
InvariantResult extract_invariants(const PadicSeries& series);

// When l does not divide the sum of squared seeds, the leading coefficient
// is a unit and mu = 0, lambda = 1, nu = 0 with no series work at all.
std::optional<InvariantResult> fast_path_invariants(const SeedSpec& spec);

// Smallest n0 with l^n0 * (l-1) >= l * (lambda+1); from this level on the
// growth law is guaranteed to have stabilized.
unsigned sufficient_level_bound(unsigned long prime, unsigned lambda);

// mu * l^level + lambda * level + nu.
long long predicted_ord(unsigned level, unsigned mu, unsigned lambda, long long nu,
                        unsigned long prime);

// Euler totient of l^level: l^level - l^(level-1); phi(1) = 1.
long long totient_prime_power(unsigned long prime, unsigned level);

} // namespace ltower

#endif
