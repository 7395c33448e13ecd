#ifndef LTOWER_SEEDS_HPP
#define LTOWER_SEEDS_HPP

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ltower/padic.hpp"

namespace ltower {

// A tower seed: an element of Z_l given exactly.  Rational seeds must have
// denominator prime to l; square-root seeds carry the branch residue that
// selects one of the two roots mod l.
struct IntegerSeed {
    BigInt value;
};

struct RationalSeed {
    BigInt num;
    BigInt den;
};

struct SqrtSeed {
    BigInt radicand;
    unsigned long branch;
};

using Seed = std::variant<IntegerSeed, RationalSeed, SqrtSeed>;

// Round-trips through parse_seed: "7", "-8", "1/3", "sqrt(3)@4".
std::string to_string(const Seed& seed);
Seed parse_seed(std::string_view text);

// The seed as an element of Z_l known to the requested precision.
PadicInt resolve_seed(const Seed& seed, unsigned long prime, unsigned precision);

// True when the seed is a unit of Z_l (valuation zero).
bool is_unit_seed(const Seed& seed, unsigned long prime);

struct SeedSpec {
    unsigned long prime;
    std::vector<Seed> seeds;

    std::size_t loop_count() const { return seeds.size(); }
};

// Throws NoUnitSeed unless some seed is prime to l; connectivity of every
// tower level is equivalent to this.
void require_unit_seed(const SeedSpec& spec);

} // namespace ltower

#endif
