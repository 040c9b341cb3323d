#include "dirac/complex.hpp"

#include <algorithm>

#include "dirac/errors.hpp"

namespace dirac {

const std::vector<Simplex>& SimplicialComplex::simplices(int p) const {
    static const std::vector<Simplex> empty;
    if (p < 0 || p > top_dimension())
        return empty;
    return by_dim_[p];
}

Index SimplicialComplex::count(int p) const {
    if (p < 0 || p > top_dimension())
        return 0;
    return static_cast<Index>(by_dim_[p].size());
}

Index SimplicialComplex::offset(int p) const {
    if (p < 0 || p > top_dimension())
        throw input_error("form degree out of range");
    return offsets_[p];
}

const Simplex& SimplicialComplex::simplex_at(Index global) const {
    int p = dimension_at(global);
    return by_dim_[p][global - offsets_[p]];
}

int SimplicialComplex::dimension_at(Index global) const {
    if (global < 0 || global >= total_)
        throw input_error("global simplex index out of range");
    int p = 0;
    while (p + 1 <= top_dimension() && offsets_[p + 1] <= global)
        ++p;
    return p;
}

std::optional<Index> SimplicialComplex::position_of(const Simplex& s) const {
    int p = s.dimension();
    if (p < 0 || p > top_dimension())
        return std::nullopt;
    const auto& list = by_dim_[p];
    auto it = std::lower_bound(list.begin(), list.end(), s);
    if (it == list.end() || *it != s)
        return std::nullopt;
    return static_cast<Index>(it - list.begin());
}

std::optional<Index> SimplicialComplex::global_index_of(const Simplex& s) const {
    auto pos = position_of(s);
    if (!pos)
        return std::nullopt;
    return offsets_[s.dimension()] + *pos;
}

SimplicialComplex build_complex(const Graph& g, int max_dim) {
    SimplicialComplex c;
    c.graph_ = g;
    if (g.vertex_count() > 0) {
        std::vector<Simplex> current;
        current.reserve(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v)
            current.push_back(Simplex{{v}});
        while (!current.empty()) {
            c.by_dim_.push_back(current);
            int p = static_cast<int>(c.by_dim_.size()) - 1;
            if (max_dim >= 0 && p >= max_dim)
                break;
            std::vector<Simplex> next;
            for (const Simplex& s : current) {
                // Common neighbors of s above its largest vertex.
                std::vector<int> extensions = g.neighbors(s.vertices[0]);
                for (std::size_t k = 1; k < s.vertices.size(); ++k) {
                    const auto& nbrs = g.neighbors(s.vertices[k]);
                    std::vector<int> merged;
                    std::set_intersection(extensions.begin(), extensions.end(),
                                          nbrs.begin(), nbrs.end(),
                                          std::back_inserter(merged));
                    extensions = std::move(merged);
                }
                for (int w : extensions) {
                    if (w <= s.vertices.back())
                        continue;
                    Simplex bigger = s;
                    bigger.vertices.push_back(w);
                    next.push_back(std::move(bigger));
                }
            }
            current = std::move(next);
        }
    }
    c.offsets_.resize(c.by_dim_.size());
    for (std::size_t p = 0; p < c.by_dim_.size(); ++p) {
        c.offsets_[p] = c.total_;
        c.f_vector_.push_back(static_cast<Index>(c.by_dim_[p].size()));
        c.total_ += static_cast<Index>(c.by_dim_[p].size());
    }
    return c;
}

long long euler_characteristic(const SimplicialComplex& c) {
    long long chi = 0;
    int sign = 1;
    for (Index v : c.f_vector()) {
        chi += sign * static_cast<long long>(v);
        sign = -sign;
    }
    return chi;
}

}  // namespace dirac
