#include "ltower/graph.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace ltower {

Multigraph::Multigraph(Vertex vertex_count,
                       const std::vector<std::tuple<Vertex, Vertex, std::uint64_t>>& edges)
    : vertex_count_(vertex_count) {
    if (vertex_count_ < 1)
        throw Error("multigraph needs at least one vertex");
    for (const auto& [u, v, mult] : edges) {
        if (u >= vertex_count_ || v >= vertex_count_)
            throw Error("edge endpoint out of range");
        if (mult == 0)
            throw Error("edge multiplicity must be positive");
        edges_[{std::min(u, v), std::max(u, v)}] += mult;
    }
}

std::uint64_t Multigraph::multiplicity(Vertex u, Vertex v) const {
    auto it = edges_.find({std::min(u, v), std::max(u, v)});
    return it == edges_.end() ? 0 : it->second;
}

std::uint64_t Multigraph::edge_total() const {
    std::uint64_t total = 0;
    for (const auto& [pair, mult] : edges_)
        total += mult;
    return total;
}

std::uint64_t Multigraph::degree(Vertex v) const {
    std::uint64_t deg = 0;
    for (const auto& [pair, mult] : edges_) {
        if (pair.first == v)
            deg += mult;
        if (pair.second == v)
            deg += mult;
    }
    return deg;
}

Multigraph bouquet(unsigned loops) {
    if (loops < 1)
        throw Error("bouquet needs at least one loop");
    return Multigraph(1, {{0, 0, loops}});
}

std::uint64_t seed_residue(const Seed& seed, unsigned long prime, unsigned level) {
    if (level == 0)
        return 0;
    BigInt r = resolve_seed(seed, prime, level).residue();
    if (!r.fits_ulong_p())
        throw LevelTooLarge("residue ring at level " + std::to_string(level) +
                            " does not fit a machine word");
    return r.get_ui();
}

Multigraph cayley_serre(const SeedSpec& spec, unsigned level) {
    require_prime(spec.prime);
    if (spec.seeds.empty())
        throw Error("seed list is empty");

    BigInt order = prime_power(spec.prime, level);
    if (!order.fits_ulong_p() || order > BigInt(std::uint32_t(-1)))
        throw LevelTooLarge("level " + std::to_string(level) + " has " + order.get_str() +
                            " vertices");
    const std::uint64_t n = order.get_ui();

    std::vector<std::tuple<Multigraph::Vertex, Multigraph::Vertex, std::uint64_t>> edges;
    edges.reserve(spec.seeds.size() * n);
    for (const Seed& s : spec.seeds) {
        const std::uint64_t c = seed_residue(s, spec.prime, level);
        for (std::uint64_t v = 0; v < n; ++v)
            edges.emplace_back(static_cast<Multigraph::Vertex>(v),
                               static_cast<Multigraph::Vertex>((v + c) % n), 1);
    }
    return Multigraph(static_cast<Multigraph::Vertex>(n), edges);
}

IntMatrix laplacian(const Multigraph& g) {
    IntMatrix m(g.vertex_count());
    for (const auto& [pair, mult] : g.edges()) {
        auto [u, v] = pair;
        if (u == v)
            continue;
        m.at(u, u) += mult;
        m.at(v, v) += mult;
        m.at(u, v) -= mult;
        m.at(v, u) -= mult;
    }
    return m;
}

bool is_connected(const Multigraph& g) {
    const auto n = g.vertex_count();
    std::vector<std::vector<Multigraph::Vertex>> adj(n);
    for (const auto& [pair, mult] : g.edges()) {
        if (pair.first == pair.second)
            continue;
        adj[pair.first].push_back(pair.second);
        adj[pair.second].push_back(pair.first);
    }
    std::vector<bool> seen(n, false);
    std::vector<Multigraph::Vertex> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        for (auto w : adj[v])
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == n;
}

void write_edge_list(const Multigraph& g, std::ostream& out) {
    out << "vertices " << g.vertex_count() << "\n";
    for (const auto& [pair, mult] : g.edges())
        out << pair.first << " " << pair.second << " " << mult << "\n";
}

Multigraph read_edge_list(std::istream& in) {
    std::string keyword;
    std::uint64_t count = 0;
    if (!(in >> keyword >> count) || keyword != "vertices")
        throw ParseError("edge list must start with a \"vertices <count>\" header");
    if (count < 1 || count > std::uint32_t(-1))
        throw ParseError("vertex count out of range");
    std::vector<std::tuple<Multigraph::Vertex, Multigraph::Vertex, std::uint64_t>> edges;
    std::uint64_t u, v, m;
    while (in >> u >> v >> m) {
        if (u >= count || v >= count)
            throw ParseError("edge endpoint out of range");
        edges.emplace_back(static_cast<Multigraph::Vertex>(u),
                           static_cast<Multigraph::Vertex>(v), m);
    }
    if (!in.eof() && in.fail())
        throw ParseError("malformed edge line");
    return Multigraph(static_cast<Multigraph::Vertex>(count), edges);
}

} // namespace ltower
