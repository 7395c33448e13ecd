#ifndef LTOWER_GRAPH_HPP
#define LTOWER_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <tuple>
#include <vector>

#include "ltower/matrix.hpp"
#include "ltower/seeds.hpp"

namespace ltower {

// Undirected multigraph: a vertex count plus a multiplicity map over
// unordered vertex pairs; loops are pairs {v, v}.  Immutable once built.
class Multigraph {
public:
    using Vertex = std::uint32_t;
    using EdgeMap = std::map<std::pair<Vertex, Vertex>, std::uint64_t>;

    Multigraph(Vertex vertex_count,
               const std::vector<std::tuple<Vertex, Vertex, std::uint64_t>>& edges);

    Vertex vertex_count() const { return vertex_count_; }
    const EdgeMap& edges() const { return edges_; }

    std::uint64_t multiplicity(Vertex u, Vertex v) const;

    // Total multiplicity; a loop counts once.
    std::uint64_t edge_total() const;

    // A loop contributes 2 to its vertex.
    std::uint64_t degree(Vertex v) const;

    friend bool operator==(const Multigraph&, const Multigraph&) = default;

private:
    Vertex vertex_count_;
    EdgeMap edges_;
};

// One vertex carrying `loops` loops: level zero of every tower.
Multigraph bouquet(unsigned loops);

// Image of the seed in Z/l^level: the generator it contributes at that level.
std::uint64_t seed_residue(const Seed& seed, unsigned long prime, unsigned level);

// The Cayley-Serre multigraph at the given tower level: vertices Z/l^level,
// one edge {v, v + residue} per vertex and seed.  A seed residue of zero
// contributes loops; level 0 is the bouquet.
Multigraph cayley_serre(const SeedSpec& spec, unsigned level);

// Graph Laplacian: degree matrix minus adjacency; loops cancel out entirely.
IntMatrix laplacian(const Multigraph& g);

bool is_connected(const Multigraph& g);

// Plain-text edge list: "vertices <count>" header then one "u v m" line per
// unordered pair, sorted; loops appear as "u u m".
void write_edge_list(const Multigraph& g, std::ostream& out);
Multigraph read_edge_list(std::istream& in);

} // namespace ltower

#endif
