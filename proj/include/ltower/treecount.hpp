#ifndef LTOWER_TREECOUNT_HPP
#define LTOWER_TREECOUNT_HPP

#include "ltower/graph.hpp"

namespace ltower {

// Spanning-tree count with its l-part split off: kappa = l^ell_ord * cofactor
// and l does not divide the cofactor.
struct TreeCount {
    BigInt kappa;
    unsigned ell_ord;
    BigInt cofactor;
};

// Matrix-Tree: determinant of the Laplacian with the row and column of
// `removed` deleted.  Any choice of removed vertex gives the same value.
BigInt laplacian_cofactor(const Multigraph& g, Multigraph::Vertex removed);

// Exact spanning-tree count of a connected multigraph.
TreeCount count_spanning_trees(const Multigraph& g, unsigned long prime);

struct LevelCount {
    unsigned level;
    unsigned ell_ord;
    BigInt kappa;
};

// Tree counts for tower levels 0..max_level.  Levels are independent and are
// computed on up to `jobs` threads; the result order and every value are
// identical to a sequential run.
std::vector<LevelCount> ord_profile(const SeedSpec& spec, unsigned max_level,
                                    std::uint64_t vertex_cap, unsigned jobs = 1);

} // namespace ltower

#endif
