#include "ltower/seeds.hpp"

#include <cctype>

namespace ltower {

namespace {

bool is_integer_literal(std::string_view s) {
    if (s.empty())
        return false;
    std::size_t i = s[0] == '-' ? 1 : 0;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

BigInt parse_big(std::string_view s, std::string_view what) {
    if (!is_integer_literal(s))
        throw ParseError("expected an integer for " + std::string(what) + ", got \"" +
                         std::string(s) + "\"");
    return BigInt(std::string(s));
}

std::string_view strip(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

} // namespace

std::string to_string(const Seed& seed) {
    if (const auto* i = std::get_if<IntegerSeed>(&seed))
        return i->value.get_str();
    if (const auto* r = std::get_if<RationalSeed>(&seed))
        return r->num.get_str() + "/" + r->den.get_str();
    const auto& s = std::get<SqrtSeed>(seed);
    return "sqrt(" + s.radicand.get_str() + ")@" + std::to_string(s.branch);
}

Seed parse_seed(std::string_view text) {
    std::string_view s = strip(text);
    if (s.empty())
        throw ParseError("empty seed");

    if (s.starts_with("sqrt(")) {
        auto close = s.find(')');
        if (close == std::string_view::npos)
            throw ParseError("unterminated sqrt( in seed \"" + std::string(text) + "\"");
        BigInt radicand = parse_big(strip(s.substr(5, close - 5)), "sqrt radicand");
        std::string_view rest = strip(s.substr(close + 1));
        if (rest.empty() || rest[0] != '@')
            throw ParseError("sqrt seed needs a branch residue, e.g. sqrt(3)@4");
        BigInt branch = parse_big(strip(rest.substr(1)), "branch residue");
        if (branch < 0 || !branch.fits_ulong_p())
            throw ParseError("branch residue out of range in \"" + std::string(text) + "\"");
        return SqrtSeed{std::move(radicand), branch.get_ui()};
    }

    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        BigInt num = parse_big(strip(s.substr(0, slash)), "numerator");
        BigInt den = parse_big(strip(s.substr(slash + 1)), "denominator");
        if (den == 0)
            throw ParseError("zero denominator in seed \"" + std::string(text) + "\"");
        return RationalSeed{std::move(num), std::move(den)};
    }

    return IntegerSeed{parse_big(s, "seed")};
}

PadicInt resolve_seed(const Seed& seed, unsigned long prime, unsigned precision) {
    if (const auto* i = std::get_if<IntegerSeed>(&seed))
        return PadicInt::from_integer(i->value, prime, precision);
    if (const auto* r = std::get_if<RationalSeed>(&seed))
        return PadicInt::from_rational(r->num, r->den, prime, precision);
    const auto& s = std::get<SqrtSeed>(seed);
    return hensel_sqrt(s.radicand, prime, s.branch, precision);
}

bool is_unit_seed(const Seed& seed, unsigned long prime) {
    return resolve_seed(seed, prime, 1).is_unit();
}

void require_unit_seed(const SeedSpec& spec) {
    require_prime(spec.prime);
    if (spec.seeds.empty())
        throw NoUnitSeed("seed list is empty");
    for (const Seed& s : spec.seeds)
        if (is_unit_seed(s, spec.prime))
            return;
    throw NoUnitSeed("every seed is divisible by " + std::to_string(spec.prime));
}

} // namespace ltower
