#include <doctest.h>

#include <sstream>

#include "ltower/graph.hpp"
#include "test_support.hpp"

using namespace ltower;

namespace {

const SeedSpec kTwoAdic{2, {RationalSeed{1, 3}, RationalSeed{3, 5}}};
const SeedSpec kThreeAdic{3, {RationalSeed{1, 2}, RationalSeed{1, 5}, RationalSeed{1, 7}}};

bool laplacian_commutes_with_shift(const Multigraph& g) {
    IntMatrix L = laplacian(g);
    const std::size_t n = L.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (L.at(i, (j + n - 1) % n) != L.at((i + 1) % n, j))
                return false;
    return true;
}

} // namespace

TEST_CASE("bouquets") {
    Multigraph b2 = bouquet(2);
    CHECK(b2.vertex_count() == 1);
    CHECK(b2.multiplicity(0, 0) == 2);
    CHECK(b2.degree(0) == 4);
    CHECK(bouquet(1).multiplicity(0, 0) == 1);
    CHECK(bouquet(3).multiplicity(0, 0) == 3);
    CHECK_THROWS_AS(bouquet(0), Error);
}

TEST_CASE("seed residues at each level") {
    CHECK(seed_residue(RationalSeed{1, 3}, 2, 2) == 3);
    CHECK(seed_residue(RationalSeed{3, 5}, 2, 1) == 1);
    CHECK(seed_residue(SqrtSeed{3, 4}, 13, 1) == 4);
    CHECK(seed_residue(IntegerSeed{-1}, 5, 2) == 24);
    CHECK(seed_residue(RationalSeed{1, 3}, 2, 0) == 0);
}

TEST_CASE("level one of the 2-adic tower is two vertices with four parallel edges") {
    Multigraph g = cayley_serre(kTwoAdic, 1);
    CHECK(g.vertex_count() == 2);
    CHECK(g.edges().size() == 1);
    CHECK(g.multiplicity(0, 1) == 4);
    CHECK(g.degree(0) == 4);
}

TEST_CASE("level one of the 3-adic tower is a tripled triangle") {
    Multigraph g = cayley_serre(kThreeAdic, 1);
    CHECK(g.vertex_count() == 3);
    CHECK(g.multiplicity(0, 1) == 3);
    CHECK(g.multiplicity(1, 2) == 3);
    CHECK(g.multiplicity(0, 2) == 3);
}

TEST_CASE("level zero is the bouquet") {
    CHECK(cayley_serre(kTwoAdic, 0) == bouquet(2));
    CHECK(cayley_serre(kThreeAdic, 0) == bouquet(3));
}

TEST_CASE("laplacians") {
    IntMatrix pair = laplacian(cayley_serre(kTwoAdic, 1));
    CHECK(pair.at(0, 0) == 4);
    CHECK(pair.at(0, 1) == -4);
    CHECK(pair.at(1, 0) == -4);
    CHECK(pair.at(1, 1) == 4);

    IntMatrix loop = laplacian(bouquet(5));
    CHECK(loop.at(0, 0) == 0);

    IntMatrix tri = laplacian(cayley_serre(kThreeAdic, 1));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(tri.at(i, j) == (i == j ? 6 : -3));
}

TEST_CASE("connectivity") {
    CHECK(is_connected(cayley_serre(kTwoAdic, 3)));
    CHECK(is_connected(cayley_serre(kThreeAdic, 2)));
    CHECK(is_connected(bouquet(1)));
    CHECK_FALSE(is_connected(Multigraph(2, {})));
    // generator 2 mod 4 never leaves a parity class
    CHECK_FALSE(is_connected(cayley_serre(SeedSpec{2, {IntegerSeed{2}}}, 2)));
}

TEST_CASE("randomized: regularity, edge totals, laplacian structure, circulant shift") {
    auto rng = ltower_test::make_rng(0x41);
    constexpr unsigned long primes[] = {2, 3, 5};
    std::uniform_int_distribution<unsigned> pick_prime(0, std::size(primes) - 1);
    std::uniform_int_distribution<long> pick(1, 60);
    for (int i = 0; i < 40; ++i) {
        unsigned long l = primes[pick_prime(rng)];
        unsigned level = std::uniform_int_distribution<unsigned>(0, 3)(rng);
        SeedSpec spec{l, {}};
        unsigned t = std::uniform_int_distribution<unsigned>(1, 4)(rng);
        for (unsigned j = 0; j < t; ++j) {
            long v = pick(rng);
            if (std::uniform_int_distribution<int>(0, 1)(rng) == 0) {
                spec.seeds.push_back(IntegerSeed{v});
            } else {
                long den = pick(rng);
                if (den % static_cast<long>(l) == 0)
                    ++den;
                spec.seeds.push_back(RationalSeed{v, den});
            }
        }

        Multigraph g = cayley_serre(spec, level);
        BigInt expected_vertices = prime_power(l, level);
        CHECK(BigInt(g.vertex_count()) == expected_vertices);
        CHECK(g.edge_total() == t * expected_vertices);
        for (Multigraph::Vertex v = 0; v < g.vertex_count(); ++v)
            CHECK(g.degree(v) == 2 * t);

        IntMatrix L = laplacian(g);
        for (std::size_t r = 0; r < L.dim(); ++r) {
            BigInt row_sum = 0;
            for (std::size_t c = 0; c < L.dim(); ++c) {
                row_sum += L.at(r, c);
                CHECK(L.at(r, c) == L.at(c, r));
            }
            CHECK(row_sum == 0);
        }
        CHECK(laplacian_commutes_with_shift(g));

        bool has_unit = false;
        for (const Seed& s : spec.seeds)
            has_unit = has_unit || is_unit_seed(s, l);
        if (level > 0)
            CHECK(is_connected(g) == has_unit);
    }
}

TEST_CASE("edge lists round-trip through the text format") {
    Multigraph g = cayley_serre(kThreeAdic, 2);
    std::stringstream buffer;
    write_edge_list(g, buffer);
    CHECK(read_edge_list(buffer) == g);

    Multigraph loops = bouquet(3);
    std::stringstream b2;
    write_edge_list(loops, b2);
    CHECK(b2.str() == "vertices 1\n0 0 3\n");
    CHECK(read_edge_list(b2) == loops);
}

TEST_CASE("edge list rejects malformed input") {
    std::stringstream no_header("0 1 4\n");
    CHECK_THROWS_AS(read_edge_list(no_header), ParseError);
    std::stringstream bad_vertex("vertices 2\n0 7 1\n");
    CHECK_THROWS_AS(read_edge_list(bad_vertex), ParseError);
    std::stringstream junk("vertices 2\n0 x 1\n");
    CHECK_THROWS_AS(read_edge_list(junk), ParseError);
}
