#ifndef EBG_HYPERGRAPH_HPP
#define EBG_HYPERGRAPH_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ebg/graph.hpp"

namespace ebg {

/// Finite hypergraph: universe 0..N-1, hyperedges sorted lexicographically,
/// nonempty and duplicate-free.
struct Hypergraph {
    int universe = 0;
    std::vector<VertexSet> edges;

    bool operator==(const Hypergraph&) const = default;
};

/// Canonicalizes the hyperedge list (sorts members and the list, collapses
/// duplicates). Throws on empty or out-of-range hyperedges.
Hypergraph make_hypergraph(int universe, std::vector<VertexSet> edges);

/// Indices of a pairwise-intersecting subfamily with empty common intersection.
struct SubfamilyWitness {
    std::vector<int> members;
};

struct HellyVerdict {
    bool helly = false;
    std::optional<SubfamilyWitness> witness;
};

struct ConformalVerdict {
    bool conformal = false;
    std::optional<VertexSet> clique;  // maximal clique of the 2-section in no hyperedge
};

/// Hyperedges become vertices; vertex v becomes the set of hyperedges containing v.
/// Vertices in no hyperedge are omitted and duplicate sets collapsed.
Hypergraph dual(const Hypergraph& h);

/// Graph on the universe; edge iff some hyperedge contains both endpoints.
Graph two_section(const Hypergraph& h);

/// Graph on hyperedge indices; edge iff the hyperedges intersect.
Graph hyper_line_graph(const Hypergraph& h);

/// Inclusion-maximal hyperedges only.
Hypergraph reduction(const Hypergraph& h);

bool is_reduced(const Hypergraph& h);

/// Berge triple criterion; on failure the witness is the subfamily of
/// hyperedges containing at least two vertices of the lexicographically first
/// failing triple.
HellyVerdict is_helly(const Hypergraph& h);

/// Every maximal clique of the 2-section lies inside some hyperedge.
ConformalVerdict is_conformal(const Hypergraph& h);

/// Hyperedges are the maximal cliques of g.
Hypergraph clique_hypergraph(const Graph& g);

/// Text format: header "N <universe>", then one hyperedge per line.
Hypergraph parse_hypergraph(std::string_view text);
std::string to_hypergraph_text(const Hypergraph& h);

}  // namespace ebg

#endif
