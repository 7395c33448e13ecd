#include "ltower/chebyshev.hpp"

#include <algorithm>

namespace ltower {

IntPolynomial shifted_chebyshev_recurrence(unsigned a) {
    std::vector<IntPolynomial> p(a + 1);
    p[0].coeff = {BigInt(0)};
    if (a >= 1)
        p[1].coeff = {BigInt(0), BigInt(1)};
    for (unsigned n = 2; n <= a; ++n) {
        // P_n = X * (n^2 - (n-1) P_1 - (n-2) P_2 - ... - P_{n-1})
        std::vector<BigInt> inner(n, BigInt(0));
        inner[0] = BigInt(n) * n;
        for (unsigned j = 1; j < n; ++j) {
            BigInt weight(n - j);
            for (std::size_t i = 0; i < p[j].coeff.size(); ++i)
                inner[i] -= weight * p[j].coeff[i];
        }
        p[n].coeff.assign(n + 1, BigInt(0));
        for (unsigned i = 0; i < n; ++i)
            p[n].coeff[i + 1] = inner[i];
    }
    return p[a];
}

BigInt shifted_chebyshev_coeff(const BigInt& n, unsigned k) {
    if (k < 1)
        throw Error("coefficient index must be >= 1");
    if (n < k)
        return BigInt(0);
    BigInt top = n + k - 1;
    BigInt b;
    mpz_bin_ui(b.get_mpz_t(), top.get_mpz_t(), 2 * k - 1);
    b *= n;
    // binom(n+k-1, 2k-1) * n is always divisible by k
    BigInt q;
    mpz_divexact_ui(q.get_mpz_t(), b.get_mpz_t(), k);
    if (k % 2 == 0)
        q = -q;
    return q;
}

unsigned coeff_precision_loss(unsigned long prime, unsigned k) {
    require_prime(prime);
    unsigned long n = 2 * static_cast<unsigned long>(k) - 1;
    unsigned ord = 0;
    for (unsigned long q = n / prime; q > 0; q /= prime)
        ord += static_cast<unsigned>(q);
    for (unsigned long m = k; m % prime == 0; m /= prime)
        ++ord;
    return ord;
}

unsigned series_precision_buffer(unsigned long prime, unsigned terms) {
    unsigned buffer = 0;
    for (unsigned k = 1; k <= terms; ++k)
        buffer = std::max(buffer, coeff_precision_loss(prime, k));
    return buffer;
}

PadicInt shifted_chebyshev_coeff_padic(const PadicInt& a, unsigned k) {
    if (k < 1)
        throw Error("coefficient index must be >= 1");
    const unsigned long prime = a.prime();

    BigInt divisor;
    mpz_fac_ui(divisor.get_mpz_t(), 2 * k - 1);
    divisor *= k;
    BigInt unit, p(prime);
    unsigned loss =
        static_cast<unsigned>(mpz_remove(unit.get_mpz_t(), divisor.get_mpz_t(), p.get_mpz_t()));

    if (a.precision() <= loss)
        throw InsufficientPrecision("coefficient " + std::to_string(k) + " over Z_" +
                                    std::to_string(prime) + " costs " + std::to_string(loss) +
                                    " digits; seed precision " + std::to_string(a.precision()) +
                                    " leaves nothing");
    const unsigned out_prec = a.precision() - loss;
    const BigInt mod_in = a.modulus();

    // a * (a+k-1)(a+k-2)...(a-k+1), reduced mod l^precision at every step.
    BigInt num = a.residue();
    for (long j = static_cast<long>(k) - 1; j >= 1 - static_cast<long>(k); --j) {
        num = (num * (a.residue() + j)) % mod_in;
        if (num < 0)
            num += mod_in;
    }

    // The true value is divisible by l^loss, hence so is its canonical residue.
    BigInt shift = prime_power(prime, loss);
    if (!mpz_divisible_p(num.get_mpz_t(), shift.get_mpz_t()))
        throw InternalError("numerator not divisible by the l-part of (2k-1)!*k");
    BigInt q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), shift.get_mpz_t());

    BigInt mod_out = prime_power(prime, out_prec);
    BigInt unit_inv;
    if (mpz_invert(unit_inv.get_mpz_t(), unit.get_mpz_t(), mod_out.get_mpz_t()) == 0)
        throw InternalError("unit part of (2k-1)!*k not invertible");
    BigInt value = (q * unit_inv) % mod_out;
    if (k % 2 == 0)
        value = -value;
    return PadicInt(prime, out_prec, std::move(value));
}

namespace {

PadicSeries integer_seed_series(const BigInt& value, unsigned long prime, unsigned terms,
                                unsigned precision) {
    // Coefficients are even functions of the seed, so only |value| matters.
    BigInt n = abs(value);
    PadicSeries s{prime, {}, std::vector<BigInt>{}};
    s.coeff.reserve(terms);
    s.exact->reserve(terms);
    for (unsigned k = 1; k <= terms; ++k) {
        BigInt c = shifted_chebyshev_coeff(n, k);
        s.coeff.push_back(PadicInt::from_integer(c, prime, precision));
        s.exact->push_back(std::move(c));
    }
    return s;
}

} // namespace

PadicSeries seed_series(const Seed& seed, unsigned long prime, unsigned terms,
                        unsigned precision) {
    require_prime(prime);
    if (terms < 1)
        throw Error("series needs at least one term");
    if (precision < 1)
        throw InsufficientPrecision("series precision must be at least 1");

    if (const auto* i = std::get_if<IntegerSeed>(&seed))
        return integer_seed_series(i->value, prime, terms, precision);

    unsigned working = precision + series_precision_buffer(prime, terms);
    PadicInt a = resolve_seed(seed, prime, working);
    PadicSeries s{prime, {}, std::nullopt};
    s.coeff.reserve(terms);
    for (unsigned k = 1; k <= terms; ++k)
        s.coeff.push_back(shifted_chebyshev_coeff_padic(a, k));
    return s;
}

PadicSeries tower_series(const SeedSpec& spec, unsigned terms, unsigned precision) {
    require_unit_seed(spec);

    PadicSeries total = seed_series(spec.seeds.front(), spec.prime, terms, precision);
    for (std::size_t i = 1; i < spec.seeds.size(); ++i) {
        PadicSeries next = seed_series(spec.seeds[i], spec.prime, terms, precision);
        for (unsigned k = 0; k < terms; ++k)
            total.coeff[k] = total.coeff[k] + next.coeff[k];
        if (total.exact && next.exact)
            for (unsigned k = 0; k < terms; ++k)
                (*total.exact)[k] += (*next.exact)[k];
        else
            total.exact.reset();
    }

    // c1 must equal the sum of squared seeds; anything else is a bug.
    const PadicInt& c1 = total.c(1);
    PadicInt sum_sq = PadicInt::zero(spec.prime, c1.precision());
    for (const Seed& s : spec.seeds) {
        PadicInt a = resolve_seed(s, spec.prime, c1.precision());
        sum_sq = sum_sq + a * a;
    }
    if (sum_sq.residue() != c1.residue())
        throw InternalError("leading series coefficient disagrees with the seed square sum");

    return total;
}

} // namespace ltower
