#include "ltower/padic.hpp"

#include <utility>

namespace ltower {

BigInt prime_power(unsigned long prime, unsigned exp) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), prime, exp);
    return r;
}

void require_prime(unsigned long p) {
    BigInt z(static_cast<unsigned long>(p));
    if (p < 2 || mpz_probab_prime_p(z.get_mpz_t(), 40) == 0)
        throw NotPrime("not a rational prime: " + std::to_string(p));
}

namespace {

BigInt reduce(const BigInt& value, const BigInt& modulus) {
    BigInt r;
    mpz_mod(r.get_mpz_t(), value.get_mpz_t(), modulus.get_mpz_t());
    return r;
}

void require_same_frame(const PadicInt& a, const PadicInt& b) {
    if (a.prime() != b.prime())
        throw PrimeMismatch("operands live over Z_" + std::to_string(a.prime()) + " and Z_" +
                            std::to_string(b.prime()));
}

} // namespace

PadicInt::PadicInt(unsigned long prime, unsigned precision, BigInt residue)
    : prime_(prime), precision_(precision), residue_(std::move(residue)) {
    require_prime(prime_);
    if (precision_ < 1)
        throw InsufficientPrecision("precision must be at least 1");
    residue_ = reduce(residue_, modulus());
}

PadicInt PadicInt::from_integer(const BigInt& n, unsigned long prime, unsigned precision) {
    return PadicInt(prime, precision, n);
}

PadicInt PadicInt::from_rational(const BigInt& num, const BigInt& den, unsigned long prime,
                                 unsigned precision) {
    require_prime(prime);
    if (mpz_divisible_ui_p(den.get_mpz_t(), prime))
        throw DenominatorNotUnit("denominator " + den.get_str() + " is divisible by " +
                                 std::to_string(prime));
    BigInt mod = prime_power(prime, precision);
    BigInt inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t()) == 0)
        throw DenominatorNotUnit("denominator " + den.get_str() + " is not invertible");
    return PadicInt(prime, precision, num * inv);
}

PadicInt PadicInt::zero(unsigned long prime, unsigned precision) {
    return PadicInt(prime, precision, BigInt(0));
}

PadicInt PadicInt::operator+(const PadicInt& rhs) const {
    require_same_frame(*this, rhs);
    unsigned prec = std::min(precision_, rhs.precision_);
    return PadicInt(prime_, prec, residue_ + rhs.residue_);
}

PadicInt PadicInt::operator-(const PadicInt& rhs) const {
    require_same_frame(*this, rhs);
    unsigned prec = std::min(precision_, rhs.precision_);
    return PadicInt(prime_, prec, residue_ - rhs.residue_);
}

PadicInt PadicInt::operator*(const PadicInt& rhs) const {
    require_same_frame(*this, rhs);
    unsigned prec = std::min(precision_, rhs.precision_);
    return PadicInt(prime_, prec, residue_ * rhs.residue_);
}

PadicInt PadicInt::invert() const {
    if (!is_unit())
        throw NotAUnit("residue " + residue_.get_str() + " is divisible by " +
                       std::to_string(prime_));
    BigInt mod = modulus();
    BigInt inv;
    if (mpz_invert(inv.get_mpz_t(), residue_.get_mpz_t(), mod.get_mpz_t()) == 0)
        throw NotAUnit("residue " + residue_.get_str() + " is not invertible");
    return PadicInt(prime_, precision_, std::move(inv));
}

bool PadicInt::is_unit() const {
    return residue_ != 0 && !mpz_divisible_ui_p(residue_.get_mpz_t(), prime_);
}

Valuation PadicInt::valuation() const {
    if (residue_ == 0)
        return Valuation::at_least(precision_);
    return Valuation::exactly(big_ord(residue_, prime_));
}

PadicInt PadicInt::truncated(unsigned precision) const {
    if (precision > precision_)
        throw PrecisionExceeded("cannot raise precision from " + std::to_string(precision_) +
                                " to " + std::to_string(precision));
    return PadicInt(prime_, precision, residue_);
}

std::string PadicInt::digits(unsigned k) const {
    if (k > precision_)
        throw PrecisionExceeded("asked for " + std::to_string(k) + " digits at precision " +
                                std::to_string(precision_));
    std::string out;
    BigInt rest = residue_;
    for (unsigned i = 0; i < k; ++i) {
        unsigned long d = mpz_fdiv_q_ui(rest.get_mpz_t(), rest.get_mpz_t(), prime_);
        if (i == 0)
            out += std::to_string(d);
        else if (i == 1)
            out += "." + std::to_string(d);
        else
            out += (prime_ > 9 ? " " : "") + std::to_string(d);
    }
    return out;
}

PadicInt hensel_sqrt(const BigInt& m, unsigned long prime, unsigned long branch,
                     unsigned precision) {
    require_prime(prime);
    if (prime == 2)
        throw EvenPrimeUnsupported("2-adic square roots are not supported");
    BigInt p(prime);
    BigInt m0 = m % p;
    if (m0 < 0)
        m0 += p;
    if (m0 == 0)
        throw NotAResidue(m.get_str() + " is divisible by " + std::to_string(prime));
    // Euler's criterion.
    BigInt euler;
    BigInt e = (p - 1) / 2;
    mpz_powm(euler.get_mpz_t(), m0.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    if (euler != 1)
        throw NotAResidue(m.get_str() + " is not a quadratic residue mod " +
                          std::to_string(prime));
    if (branch >= prime || (BigInt(branch) * branch - m0) % p != 0)
        throw BranchInvalid("branch residue " + std::to_string(branch) + " does not square to " +
                            m.get_str() + " mod " + std::to_string(prime));

    // Newton step x -> (x + m/x)/2 doubles the known precision each round.
    BigInt x(branch);
    unsigned known = 1;
    while (known < precision) {
        known = std::min(2 * known, precision);
        BigInt mod = prime_power(prime, known);
        BigInt xinv, two_inv;
        mpz_invert(xinv.get_mpz_t(), x.get_mpz_t(), mod.get_mpz_t());
        BigInt two(2);
        mpz_invert(two_inv.get_mpz_t(), two.get_mpz_t(), mod.get_mpz_t());
        x = ((x + m * xinv) * two_inv) % mod;
        if (x < 0)
            x += mod;
    }
    return PadicInt(prime, precision, x);
}

unsigned big_ord(const BigInt& n, unsigned long prime) {
    if (n == 0)
        throw ZeroInput("valuation of zero is undefined");
    require_prime(prime);
    BigInt p(prime), unit;
    return static_cast<unsigned>(
        mpz_remove(unit.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

} // namespace ltower
