#include <doctest.h>

#include "ltower/invariants.hpp"
#include "test_support.hpp"

using namespace ltower;

namespace {

PadicSeries series_of(const SeedSpec& spec, unsigned terms, unsigned precision) {
    return tower_series(spec, terms, precision);
}

const SeedSpec kTwoAdic{2, {RationalSeed{1, 3}, RationalSeed{3, 5}}};
const SeedSpec kThreeAdic{3, {RationalSeed{1, 2}, RationalSeed{1, 5}, RationalSeed{1, 7}}};
const SeedSpec kThirteenAdic{13, {SqrtSeed{3, 4}, SqrtSeed{10, 6}}};

} // namespace

TEST_CASE("invariants of the three worked towers") {
    InvariantResult two = extract_invariants(series_of(kTwoAdic, 8, 16));
    CHECK(two.mu == 0);
    CHECK(two.lambda == 5);
    CHECK(two.k0 == 3);
    CHECK_FALSE(two.provisional);
    CHECK(two.n0_bound == 4);

    InvariantResult three = extract_invariants(series_of(kThreeAdic, 6, 12));
    CHECK(three.mu == 0);
    CHECK(three.lambda == 3);
    CHECK(three.k0 == 2);
    CHECK_FALSE(three.provisional);
    CHECK(three.n0_bound == 2);

    InvariantResult thirteen = extract_invariants(series_of(kThirteenAdic, 4, 8));
    CHECK(thirteen.mu == 0);
    CHECK(thirteen.lambda == 3);
    CHECK(thirteen.k0 == 2);
    CHECK_FALSE(thirteen.provisional);
    CHECK(thirteen.n0_bound == 1);
}

TEST_CASE("lambda is odd and tied to k0") {
    for (const SeedSpec* spec : {&kTwoAdic, &kThreeAdic, &kThirteenAdic}) {
        InvariantResult r = extract_invariants(series_of(*spec, 6, 12));
        CHECK(r.lambda % 2 == 1);
        CHECK(r.lambda == 2 * r.k0 - 1);
    }
}

TEST_CASE("fast path fires exactly when the seed square sum is a unit") {
    auto hit = fast_path_invariants(SeedSpec{5, {IntegerSeed{1}, IntegerSeed{1}}});
    REQUIRE(hit.has_value());
    CHECK(hit->mu == 0);
    CHECK(hit->lambda == 1);
    REQUIRE(hit->nu.has_value());
    CHECK(*hit->nu == 0);
    CHECK(hit->n0_bound == 1);

    CHECK_FALSE(fast_path_invariants(kTwoAdic).has_value());      // c1 is even
    CHECK_FALSE(fast_path_invariants(kThirteenAdic).has_value()); // c1 = 13
}

TEST_CASE("fast path agrees with full extraction whenever it fires") {
    auto rng = ltower_test::make_rng(0x31);
    constexpr unsigned long primes[] = {2, 3, 5, 7, 13};
    std::uniform_int_distribution<unsigned> pick_prime(0, std::size(primes) - 1);
    std::uniform_int_distribution<long> pick(1, 40);
    for (int i = 0; i < 60; ++i) {
        unsigned long l = primes[pick_prime(rng)];
        SeedSpec spec{l, {IntegerSeed{1}}};
        for (int j = 0; j < 2; ++j) {
            long num = pick(rng), den = pick(rng);
            if (den % static_cast<long>(l) != 0)
                spec.seeds.push_back(RationalSeed{num, den});
        }
        auto fast = fast_path_invariants(spec);
        if (!fast)
            continue;
        InvariantResult full = extract_invariants(series_of(spec, 4, 10));
        CHECK(full.mu == fast->mu);
        CHECK(full.lambda == fast->lambda);
    }
}

TEST_CASE("sufficient level bound") {
    CHECK(sufficient_level_bound(2, 5) == 4);
    CHECK(sufficient_level_bound(3, 3) == 2);
    CHECK(sufficient_level_bound(13, 1) == 1);

    // minimality against the defining inequality l^n0 (l-1) >= l (lambda+1)
    for (unsigned long l : {2ul, 3ul, 5ul, 13ul, 97ul})
        for (unsigned lambda = 1; lambda <= 19; lambda += 2) {
            unsigned n0 = sufficient_level_bound(l, lambda);
            CHECK(prime_power(l, n0) * (l - 1) >= BigInt(l) * (lambda + 1));
            if (n0 > 0)
                CHECK(prime_power(l, n0 - 1) * (l - 1) < BigInt(l) * (lambda + 1));
        }
}

TEST_CASE("growth prediction") {
    CHECK(predicted_ord(3, 0, 5, -3, 2) == 12);
    CHECK(predicted_ord(2, 0, 3, 0, 3) == 6);
    for (unsigned mu = 0; mu <= 3; ++mu)
        CHECK(predicted_ord(0, mu, 7, -2, 5) == static_cast<long long>(mu) - 2);
}

TEST_CASE("totient of prime powers") {
    CHECK(totient_prime_power(2, 0) == 1);
    CHECK(totient_prime_power(2, 3) == 4);
    CHECK(totient_prime_power(13, 2) == 156);
}

TEST_CASE("scaling a series by l^m shifts mu and fixes lambda") {
    PadicSeries q = series_of(kTwoAdic, 6, 16);
    InvariantResult base = extract_invariants(q);
    for (unsigned m = 1; m <= 3; ++m) {
        PadicSeries scaled{q.prime, {}, std::nullopt};
        for (const PadicInt& c : q.coeff)
            scaled.coeff.push_back(
                PadicInt(q.prime, c.precision(), c.residue() * prime_power(q.prime, m)));
        InvariantResult r = extract_invariants(scaled);
        CHECK(r.mu == base.mu + m);
        CHECK(r.lambda == base.lambda);
        CHECK(r.k0 == base.k0);
        CHECK(r.provisional); // positive mu from a truncated series stays provisional
    }
}

TEST_CASE("an exactly known polynomial certifies positive mu") {
    // both seeds 1: the series is exactly 2T
    PadicSeries q = series_of(SeedSpec{2, {IntegerSeed{1}, IntegerSeed{1}}}, 6, 12);
    REQUIRE(q.exact.has_value());
    InvariantResult r = extract_invariants(q);
    CHECK(r.mu == 1);
    CHECK(r.lambda == 1);
    CHECK_FALSE(r.provisional);
}

TEST_CASE("provisional flag tracks uncertain earlier coefficients") {
    // c1 indistinguishable from zero at precision 2, c2 with exact valuation 2:
    // the bound on c1 does not exceed mu, so k0 could move
    PadicSeries tight{2, {PadicInt::zero(2, 2), PadicInt(2, 8, 4)}, std::nullopt};
    InvariantResult r = extract_invariants(tight);
    CHECK(r.mu == 2);
    CHECK(r.k0 == 2);
    CHECK(r.provisional);

    // same shape but a unit at c2: mu = 0 is a floor, so the result is certain
    PadicSeries unit{2, {PadicInt::zero(2, 2), PadicInt(2, 8, 7)}, std::nullopt};
    InvariantResult s = extract_invariants(unit);
    CHECK(s.mu == 0);
    CHECK(s.k0 == 2);
    CHECK(s.lambda == 3);
    CHECK_FALSE(s.provisional);
}

TEST_CASE("a series with no exact valuation anywhere is rejected") {
    PadicSeries fog{5, {PadicInt::zero(5, 6), PadicInt::zero(5, 6)}, std::nullopt};
    CHECK_THROWS_AS(extract_invariants(fog), SeriesIndistinguishableFromZero);

    PadicSeries zero_poly{5, {PadicInt::zero(5, 6)}, std::vector<BigInt>{BigInt(0)}};
    CHECK_THROWS_AS(extract_invariants(zero_poly), SeriesIndistinguishableFromZero);
}
