#include "ltower/invariants.hpp"

#include <limits>

namespace ltower {

namespace {

InvariantResult from_exact_coefficients(const PadicSeries& series) {
    const auto& exact = *series.exact;
    InvariantResult r;
    bool found = false;
    for (unsigned k = 1; k <= exact.size(); ++k) {
        const BigInt& c = exact[k - 1];
        if (c == 0)
            continue;
        unsigned v = big_ord(c, series.prime);
        if (!found || v < r.mu) {
            r.mu = v;
            r.k0 = k;
            found = true;
        }
    }
    if (!found)
        throw SeriesIndistinguishableFromZero("every coefficient is exactly zero");
    r.lambda = 2 * r.k0 - 1;
    r.provisional = false; // polynomial fully in view; valuations exact
    r.n0_bound = sufficient_level_bound(series.prime, r.lambda);
    return r;
}

} // namespace

InvariantResult extract_invariants(const PadicSeries& series) {
    if (series.terms() < 1)
        throw Error("series has no coefficients");
    if (series.exact)
        return from_exact_coefficients(series);

    InvariantResult r;
    bool found = false;
    for (unsigned k = 1; k <= series.terms(); ++k) {
        Valuation v = series.c(k).valuation();
        if (!v.exact())
            continue;
        if (!found || v.value < r.mu) {
            r.mu = v.value;
            r.k0 = k;
            found = true;
        }
    }
    if (!found)
        throw SeriesIndistinguishableFromZero(
            "no coefficient has an exact valuation at this precision");
    r.lambda = 2 * r.k0 - 1;

    // mu > 0 can always be undercut by a coefficient beyond the truncation,
    // and an earlier indeterminate coefficient whose bound does not exceed mu
    // could steal k0.  mu = 0 is a floor: indeterminate bounds are >= 1.
    r.provisional = r.mu > 0;
    for (unsigned k = 1; k < r.k0 && !r.provisional; ++k) {
        Valuation v = series.c(k).valuation();
        if (!v.exact() && v.value <= r.mu)
            r.provisional = true;
    }

    r.n0_bound = sufficient_level_bound(series.prime, r.lambda);
    return r;
}

std::optional<InvariantResult> fast_path_invariants(const SeedSpec& spec) {
    require_prime(spec.prime);
    PadicInt c1 = PadicInt::zero(spec.prime, 1);
    for (const Seed& s : spec.seeds) {
        PadicInt a = resolve_seed(s, spec.prime, 1);
        c1 = c1 + a * a;
    }
    if (!c1.is_unit())
        return std::nullopt;
    InvariantResult r;
    r.mu = 0;
    r.lambda = 1;
    r.k0 = 1;
    r.provisional = false;
    r.n0_bound = sufficient_level_bound(spec.prime, 1);
    r.nu = 0;
    return r;
}

unsigned sufficient_level_bound(unsigned long prime, unsigned lambda) {
    require_prime(prime);
    BigInt target = BigInt(prime) * (lambda + 1);
    BigInt lhs = prime - 1;
    unsigned n0 = 0;
    while (lhs < target) {
        lhs *= prime;
        ++n0;
    }
    return n0;
}

long long predicted_ord(unsigned level, unsigned mu, unsigned lambda, long long nu,
                        unsigned long prime) {
    BigInt value = BigInt(mu) * prime_power(prime, level) +
                   BigInt(lambda) * level + BigInt(static_cast<long>(nu));
    if (!value.fits_slong_p())
        throw Error("predicted valuation overflows");
    return value.get_si();
}

long long totient_prime_power(unsigned long prime, unsigned level) {
    if (level == 0)
        return 1;
    BigInt phi = prime_power(prime, level) - prime_power(prime, level - 1);
    if (!phi.fits_slong_p())
        throw Error("totient overflows");
    return phi.get_si();
}

} // namespace ltower
