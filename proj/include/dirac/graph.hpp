#ifndef DIRAC_GRAPH_HPP
#define DIRAC_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dirac {

/**
 * A finite simple graph on vertices 0..vertex_count-1.
 *
 * Edges are stored as lexicographically sorted (i, j) pairs with i < j;
 * no self-loops, no duplicates. Immutable after construction.
 */
class Graph {
public:
    Graph() = default;

    // Validates and canonicalizes the edge list; throws input_error on
    // self-loops, duplicates or endpoints out of range.
    static Graph from_edges(int vertex_count, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return vertex_count_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<int>& neighbors(int v) const;
    bool has_edge(int i, int j) const;
    int degree(int v) const;
    int max_degree() const;
    bool is_connected() const;

private:
    int vertex_count_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adjacency_;  // sorted neighbor lists
};

/** An induced subgraph together with the original vertex ids of its vertices. */
struct InducedSubgraph {
    Graph graph;
    std::vector<int> vertex_labels;  // vertex_labels[new id] = old id
};

// Induced subgraph on a set of vertices (given in any order; relabeled in
// increasing original-id order).
InducedSubgraph induced_subgraph(const Graph& g, std::vector<int> vertices);

// Unit sphere S(x): induced subgraph on the neighbors of x.
InducedSubgraph unit_sphere(const Graph& g, int x);

/**
 * Named graph generators used as fixtures.
 *
 * Parametrized families: complete(n), cycle(n>=3), star(n>=1, n edges around
 * a center), path(n>=1, n vertices), wheel(n>=3, n rim vertices plus a hub,
 * hub has the highest id). The Platonic solids, the Petersen graph and
 * tetrahedron/cube/octahedron/dodecahedron/icosahedron take no parameter.
 */
Graph generate(const std::string& name, std::optional<int> n = std::nullopt);

// Names accepted by generate(), in canonical order.
const std::vector<std::string>& generator_names();

// Default parameter used by the CLI and the acceptance fixtures for the
// parametrized families (complete 5, cycle 6, star 5, path 5, wheel 5).
int default_generator_size(const std::string& name);

// Erdos-Renyi G(n, p) with a fully deterministic seed -> graph map
// (std::mt19937_64 raw output, no distribution adapters).
Graph random_graph(int n, double p, std::uint64_t seed);

/**
 * Edge-list text format: first line is the vertex count, every following
 * nonempty line is "i j" with 0 <= i < j < n. '#' starts a comment.
 */
Graph parse_graph(const std::string& text);
std::string serialize_graph(const Graph& g);

Graph read_graph_file(const std::string& path);

}  // namespace dirac

#endif
