#include "ltower/treecount.hpp"

#include <atomic>
#include <exception>
#include <thread>

namespace ltower {

BigInt laplacian_cofactor(const Multigraph& g, Multigraph::Vertex removed) {
    if (removed >= g.vertex_count())
        throw Error("removed vertex out of range");
    const std::size_t n = g.vertex_count();
    IntMatrix full = laplacian(g);
    IntMatrix minor(n - 1);
    for (std::size_t i = 0, mi = 0; i < n; ++i) {
        if (i == removed)
            continue;
        for (std::size_t j = 0, mj = 0; j < n; ++j) {
            if (j == removed)
                continue;
            minor.at(mi, mj) = full.at(i, j);
            ++mj;
        }
        ++mi;
    }
    return bareiss_determinant(std::move(minor));
}

TreeCount count_spanning_trees(const Multigraph& g, unsigned long prime) {
    require_prime(prime);
    if (!is_connected(g))
        throw Disconnected("graph has no spanning tree");
    BigInt kappa = laplacian_cofactor(g, 0);
    if (kappa < 1)
        throw InternalError("spanning-tree count of a connected graph must be positive");
    TreeCount t;
    t.ell_ord = big_ord(kappa, prime);
    t.cofactor = kappa / prime_power(prime, t.ell_ord);
    t.kappa = std::move(kappa);
    return t;
}

std::vector<LevelCount> ord_profile(const SeedSpec& spec, unsigned max_level,
                                    std::uint64_t vertex_cap, unsigned jobs) {
    require_prime(spec.prime);
    for (unsigned n = 0; n <= max_level; ++n) {
        BigInt vertices = prime_power(spec.prime, n);
        if (vertices > vertex_cap)
            throw LevelTooLarge("level " + std::to_string(n) + " needs " + vertices.get_str() +
                                " vertices, cap is " + std::to_string(vertex_cap));
    }

    std::vector<LevelCount> out(max_level + 1);
    std::vector<std::exception_ptr> failures(max_level + 1);
    std::atomic<unsigned> next{0};

    auto worker = [&] {
        for (unsigned n = next.fetch_add(1); n <= max_level; n = next.fetch_add(1)) {
            try {
                TreeCount t = count_spanning_trees(cayley_serre(spec, n), spec.prime);
                out[n] = LevelCount{n, t.ell_ord, std::move(t.kappa)};
            } catch (...) {
                failures[n] = std::current_exception();
            }
        }
    };

    const unsigned threads = std::min<unsigned>(std::max(1u, jobs), max_level + 1);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned i = 0; i < threads; ++i)
            pool.emplace_back(worker);
    }

    for (unsigned n = 0; n <= max_level; ++n)
        if (failures[n])
            std::rethrow_exception(failures[n]);
    return out;
}

} // namespace ltower
