#ifndef EBG_ORACLE_HPP
#define EBG_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "ebg/biclique.hpp"
#include "ebg/blg.hpp"
#include "ebg/graph.hpp"
#include "ebg/hypergraph.hpp"

namespace ebg::oracle {

/// Reproducible stream: mt19937_64 over the seed, pairs sampled in
/// lexicographic order. Same seed, same graph sequence.
struct Rng {
    std::mt19937_64 engine;
    explicit Rng(std::uint64_t seed) : engine(seed) {}
};

/// Filters all 2^n vertex subsets; keeps the inclusion-maximal induced
/// complete bipartite ones. Capped at n = 14.
std::vector<Biclique> brute_bicliques(const Graph& g);

/// Exhaustive search over pairwise-intersecting subfamilies; the witness is a
/// minimum-cardinality failing subfamily. Capped at 30 hyperedges.
HellyVerdict brute_helly(const Hypergraph& h);

/// Definitional check over the maximal cliques of the 2-section. Universe
/// capped at 20.
ConformalVerdict brute_conformal(const Hypergraph& h);

struct HereditaryHellyResult {
    bool holds = false;
    std::optional<VertexSet> subset;  // first induced subgraph whose EB is not Helly
};

/// For every vertex subset S (|S| >= 2, ordered by size then lexicographically)
/// the edge-biclique hypergraph of the induced subgraph must be Helly, with
/// bicliques taken from brute_bicliques. Capped at n = 10.
HereditaryHellyResult brute_hereditary_helly(const Graph& g);

struct FDecomposition {
    EdgeSet f;
    Graph root;
    std::vector<EdgeId> edge_map;
};

/// Enumerates F subsets of E(H) by size then lexicographically; accepts the
/// first with a triangle-free root of H - F passing verify_f_decomposition.
/// Capped at 20 edges.
std::optional<FDecomposition> search_f_decomposition(const Graph& h);

/// Erdos-Renyi G(n, p); throws when p is outside [0, 1].
Graph random_graph(int n, double p, Rng& rng);

}  // namespace ebg::oracle

#endif
