#ifndef EBG_RECOGNITION_HPP
#define EBG_RECOGNITION_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ebg/graph.hpp"
#include "ebg/hypergraph.hpp"

namespace ebg {

/// Injective pattern-vertex -> host-vertex map preserving adjacency and
/// non-adjacency.
using Embedding = std::vector<Vertex>;

/// Lexicographically-first induced embedding of pattern into host, or nullopt.
/// Pattern capped at 10 vertices.
std::optional<Embedding> find_induced(const Graph& host, const Graph& pattern);

struct Verdict {
    bool answer = false;
    std::optional<Embedding> embedding;  // forbidden-subgraph witness on failure
};

/// Conformality of the edge-biclique hypergraph: no induced triangular prism.
Verdict is_eb_conformal(const Graph& g);

struct CliqueHellyVerdict {
    bool answer = false;
    std::optional<VertexSet> extended_triangle;  // violating extended triangle
    std::optional<SubfamilyWitness> subfamily;   // only from the brute route
};

/// Extended-triangle criterion: every extended triangle (vertices adjacent to
/// at least two corners of a triangle) must contain a universal vertex.
/// With use_brute the definitional Helly test of the clique hypergraph runs
/// instead, for cross-validation.
CliqueHellyVerdict is_clique_helly(const Graph& h, bool use_brute = false);

/// Helly property of the edge-biclique hypergraph, decided on the biclique
/// line graph.
CliqueHellyVerdict is_eb_helly(const Graph& g);

struct BTemplateWitness {
    int kind = 1;            // 1: star base, 2: K_{3,3} base
    VertexSet base;          // kind 1: z,1,2,3; kind 2: 1,1',2,2',3,3'
    std::array<Vertex, 3> x;
};

/// Definition-driven search over induced K_{1,3} and K_{3,3} bases; first
/// witness in canonical order.
std::optional<BTemplateWitness> find_b_template(const Graph& g);

/// Re-checks the witness conditions directly.
bool verify_b_template(const Graph& g, const BTemplateWitness& w);

struct HereditaryHellyVerdict {
    bool answer = false;
    std::optional<Embedding> prism;
    std::optional<BTemplateWitness> b_template;
};

/// Hereditary Helly property of the edge-biclique hypergraph: no induced
/// prism and no induced B-template.
HereditaryHellyVerdict is_eb_hereditary_helly(const Graph& g);

struct HereditaryBlgVerdict {
    bool answer = false;
    std::string pattern;  // "claw", "diamond" or "C4" on failure
    std::optional<Embedding> embedding;
};

/// Hereditary biclique line graphs: no induced claw, diamond, or C4.
HereditaryBlgVerdict is_hereditary_blg(const Graph& h);

}  // namespace ebg

#endif
