#ifndef DIRAC_TEST_HELPERS_HPP
#define DIRAC_TEST_HELPERS_HPP

#include <algorithm>
#include <cmath>
#include <vector>

#include "dirac/complex.hpp"
#include "dirac/graph.hpp"
#include "dirac/types.hpp"

namespace dirac::testing {

// The eleven fixture graphs used throughout the suites.
inline std::vector<Graph> generator_fixtures() {
    std::vector<Graph> graphs;
    for (const auto& name : generator_names())
        graphs.push_back(generate(name));
    return graphs;
}

inline bool multisets_close(std::vector<double> a, std::vector<double> b,
                            double tol) {
    if (a.size() != b.size())
        return false;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::abs(a[i] - b[i]) > tol)
            return false;
    return true;
}

inline std::vector<double> to_vector(const Vector& v) {
    return std::vector<double>(v.data(), v.data() + v.size());
}

// Independent clique oracle: test every vertex subset for pairwise adjacency.
// Usable for graphs with at most ~20 vertices.
inline std::vector<std::vector<int>> brute_force_cliques(const Graph& g) {
    std::vector<std::vector<int>> cliques;
    const int n = g.vertex_count();
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> vertices;
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v))
                vertices.push_back(v);
        bool clique = true;
        for (std::size_t i = 0; i < vertices.size() && clique; ++i)
            for (std::size_t j = i + 1; j < vertices.size() && clique; ++j)
                if (!g.has_edge(vertices[i], vertices[j]))
                    clique = false;
        if (clique)
            cliques.push_back(std::move(vertices));
    }
    std::sort(cliques.begin(), cliques.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  if (a.size() != b.size())
                      return a.size() < b.size();
                  return a < b;
              });
    return cliques;
}

}  // namespace dirac::testing

#endif
