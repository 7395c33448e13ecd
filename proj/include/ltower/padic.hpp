#ifndef LTOWER_PADIC_HPP
#define LTOWER_PADIC_HPP

#include <gmpxx.h>

#include <string>

#include "ltower/errors.hpp"

namespace ltower {

using BigInt = mpz_class;

// prime^exp as an exact integer.
BigInt prime_power(unsigned long prime, unsigned exp);

// Throws NotPrime unless p is a rational prime >= 2.
void require_prime(unsigned long p);

// l-adic valuation of an element known to finite precision: either exact,
// or a lower bound when the residue vanishes at full precision.
struct Valuation {
    enum class Kind { Exact, AtLeast };

    Kind kind;
    unsigned value;

    bool exact() const { return kind == Kind::Exact; }

    static Valuation exactly(unsigned v) { return {Kind::Exact, v}; }
    static Valuation at_least(unsigned v) { return {Kind::AtLeast, v}; }

    friend bool operator==(const Valuation&, const Valuation&) = default;
};

// An element of Z_l known modulo l^precision.  Values are immutable;
// arithmetic returns fresh values whose precision is the minimum of the
// operand precisions.
class PadicInt {
public:
    PadicInt(unsigned long prime, unsigned precision, BigInt residue);

    static PadicInt from_integer(const BigInt& n, unsigned long prime, unsigned precision);
    static PadicInt from_rational(const BigInt& num, const BigInt& den, unsigned long prime,
                                  unsigned precision);
    static PadicInt zero(unsigned long prime, unsigned precision);

    unsigned long prime() const { return prime_; }
    unsigned precision() const { return precision_; }
    const BigInt& residue() const { return residue_; }
    BigInt modulus() const { return prime_power(prime_, precision_); }

    PadicInt operator+(const PadicInt& rhs) const;
    PadicInt operator-(const PadicInt& rhs) const;
    PadicInt operator*(const PadicInt& rhs) const;
    PadicInt invert() const;

    bool is_unit() const;
    bool zero_residue() const { return residue_ == 0; }

    Valuation valuation() const;

    // Same value, forgotten down to a smaller precision.
    PadicInt truncated(unsigned precision) const;

    // First k base-l digits rendered "a0.a1a2..."; digits after the dot are
    // space separated when the prime has more than one decimal digit.
    std::string digits(unsigned k) const;

    friend bool operator==(const PadicInt&, const PadicInt&) = default;

private:
    unsigned long prime_;
    unsigned precision_;
    BigInt residue_;
};

// Square root of m in Z_l via quadratic Hensel lifting.  Requires an odd
// prime not dividing m, with m a quadratic residue mod l; branch picks one
// of the two roots (result == branch mod l).
PadicInt hensel_sqrt(const BigInt& m, unsigned long prime, unsigned long branch,
                     unsigned precision);

// Exponent of the largest power of prime dividing n; n must be nonzero.
unsigned big_ord(const BigInt& n, unsigned long prime);

} // namespace ltower

#endif
