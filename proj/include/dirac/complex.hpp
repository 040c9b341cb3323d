#ifndef DIRAC_COMPLEX_HPP
#define DIRAC_COMPLEX_HPP

#include <optional>
#include <utility>
#include <vector>

#include "dirac/graph.hpp"
#include "dirac/types.hpp"

namespace dirac {

/**
 * A simplex of the clique complex, stored as its strictly increasing vertex
 * list. The increasing order is the canonical orientation; every simplex
 * shared by two graphs therefore carries the same orientation in both.
 */
struct Simplex {
    std::vector<int> vertices;

    int dimension() const { return static_cast<int>(vertices.size()) - 1; }
    auto operator<=>(const Simplex&) const = default;
};

/**
 * The clique (Whitney) complex of a graph: per dimension, the lexicographically
 * ordered list of complete subgraphs. Immutable after construction.
 */
class SimplicialComplex {
public:
    const Graph& graph() const { return graph_; }
    // Highest dimension present; -1 for the empty complex.
    int top_dimension() const { return static_cast<int>(by_dim_.size()) - 1; }

    const std::vector<std::vector<Simplex>>& simplices_by_dim() const { return by_dim_; }
    const std::vector<Simplex>& simplices(int p) const;
    Index count(int p) const;                // v_p (0 outside the range)
    const std::vector<Index>& f_vector() const { return f_vector_; }
    Index total() const { return total_; }   // v = sum of v_p

    // Global index of the pos-th p-simplex in the stacked ordering
    // (dimension-major, lexicographic inside a dimension).
    Index offset(int p) const;
    Index global_index(int p, Index pos) const { return offset(p) + pos; }
    const Simplex& simplex_at(Index global) const;
    int dimension_at(Index global) const;

    // Position of a simplex inside its dimension; nullopt if absent.
    std::optional<Index> position_of(const Simplex& s) const;
    std::optional<Index> global_index_of(const Simplex& s) const;
    bool contains(const Simplex& s) const { return position_of(s).has_value(); }

    friend SimplicialComplex build_complex(const Graph& g, int max_dim);

private:
    Graph graph_;
    std::vector<std::vector<Simplex>> by_dim_;
    std::vector<Index> f_vector_;
    std::vector<Index> offsets_;
    Index total_ = 0;
};

/**
 * Enumerate every complete subgraph of g up to dimension max_dim
 * (max_dim < 0: unbounded). Each p-simplex is extended only by common
 * neighbors above its largest vertex, so every clique is found exactly once
 * and each dimension comes out lexicographically sorted.
 */
SimplicialComplex build_complex(const Graph& g, int max_dim = -1);

// chi(G) = sum of (-1)^n v_n.
long long euler_characteristic(const SimplicialComplex& c);

}  // namespace dirac

#endif
