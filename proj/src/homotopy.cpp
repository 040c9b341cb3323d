#include "dirac/homotopy.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "dirac/errors.hpp"

namespace dirac {

namespace {

// Vertex subsets of one host graph, as packed bitmasks.
using Subset = std::vector<std::uint64_t>;

class ContractibilityEngine {
public:
    explicit ContractibilityEngine(const Graph& g) : graph_(g) {
        words_ = (g.vertex_count() + 63) / 64;
        neighbor_masks_.resize(g.vertex_count(), Subset(words_, 0));
        for (int v = 0; v < g.vertex_count(); ++v)
            for (int w : g.neighbors(v))
                set_bit(neighbor_masks_[v], w);
    }

    Contractibility full_graph() {
        Subset all(words_, 0);
        for (int v = 0; v < graph_.vertex_count(); ++v)
            set_bit(all, v);
        return evaluate(all);
    }

    Contractibility sphere_of(int x, const Subset& within) {
        Subset sphere(words_, 0);
        for (std::size_t w = 0; w < words_; ++w)
            sphere[w] = neighbor_masks_[x][w] & within[w];
        return evaluate(sphere);
    }

    Subset all_vertices() const {
        Subset all(words_, 0);
        for (int v = 0; v < graph_.vertex_count(); ++v)
            set_bit(all, v);
        return all;
    }

    Contractibility evaluate(Subset subset) {
        const int m = popcount(subset);
        if (m == 0)
            return Contractibility::No;
        if (m == 1)
            return Contractibility::Yes;
        if (auto it = memo_.find(subset); it != memo_.end())
            return it->second;

        Contractibility result = evaluate_uncached(subset, m);
        memo_.emplace(std::move(subset), result);
        return result;
    }

    static void set_bit(Subset& s, int v) { s[v / 64] |= std::uint64_t(1) << (v % 64); }
    static bool test_bit(const Subset& s, int v) {
        return (s[v / 64] >> (v % 64)) & 1;
    }
    static int popcount(const Subset& s) {
        int n = 0;
        for (std::uint64_t w : s)
            n += __builtin_popcountll(w);
        return n;
    }

private:
    Contractibility evaluate_uncached(const Subset& subset, int m) {
        std::vector<int> members;
        for (int v = 0; v < graph_.vertex_count(); ++v)
            if (test_bit(subset, v))
                members.push_back(v);

        if (!connected(subset, members))
            return Contractibility::No;

        // A cone is contractible: peel base vertices, whose spheres are cones again.
        for (int apex : members) {
            bool dominates = true;
            for (int v : members)
                if (v != apex && !test_bit(neighbor_masks_[apex], v)) {
                    dominates = false;
                    break;
                }
            if (dominates)
                return Contractibility::Yes;
        }

        if (m > 12)
            return Contractibility::Undecided;

        bool undecided = false;
        for (int x : members) {
            Contractibility sphere = sphere_of(x, subset);
            if (sphere == Contractibility::Undecided) {
                undecided = true;
                continue;
            }
            if (sphere != Contractibility::Yes)
                continue;
            Subset rest = subset;
            rest[x / 64] &= ~(std::uint64_t(1) << (x % 64));
            Contractibility remainder = evaluate(std::move(rest));
            if (remainder == Contractibility::Yes)
                return Contractibility::Yes;
            if (remainder == Contractibility::Undecided)
                undecided = true;
        }
        return undecided ? Contractibility::Undecided : Contractibility::No;
    }

    bool connected(const Subset& subset, const std::vector<int>& members) const {
        std::vector<int> stack = {members.front()};
        Subset seen(words_, 0);
        set_bit(seen, members.front());
        int count = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : graph_.neighbors(v)) {
                if (test_bit(subset, w) && !test_bit(seen, w)) {
                    set_bit(seen, w);
                    ++count;
                    stack.push_back(w);
                }
            }
        }
        return count == static_cast<int>(members.size());
    }

    const Graph& graph_;
    std::size_t words_ = 0;
    std::vector<Subset> neighbor_masks_;
    std::map<Subset, Contractibility> memo_;
};

}  // namespace

Contractibility contractibility(const Graph& g) {
    if (g.vertex_count() == 0)
        return Contractibility::No;
    ContractibilityEngine engine(g);
    return engine.full_graph();
}

bool is_contractible(const Graph& g) {
    switch (contractibility(g)) {
        case Contractibility::Yes:
            return true;
        case Contractibility::No:
            return false;
        default:
            throw input_error("contractibility undecided beyond the 12-vertex cap");
    }
}

Contraction contract(const Graph& g) {
    ContractibilityEngine engine(g);
    auto current = engine.all_vertices();
    std::vector<int> removed;
    bool progress = true;
    while (progress) {
        progress = false;
        for (int x = 0; x < g.vertex_count(); ++x) {
            if (!ContractibilityEngine::test_bit(current, x))
                continue;
            if (ContractibilityEngine::popcount(current) == 1)
                break;
            if (engine.sphere_of(x, current) == Contractibility::Yes) {
                current[x / 64] &= ~(std::uint64_t(1) << (x % 64));
                removed.push_back(x);
                progress = true;
                break;
            }
        }
    }
    std::vector<int> retained;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (ContractibilityEngine::test_bit(current, v))
            retained.push_back(v);
    InducedSubgraph reduced = induced_subgraph(g, retained);
    return {std::move(reduced.graph), std::move(removed),
            std::move(reduced.vertex_labels)};
}

Cover parse_cover(const std::string& text) {
    Cover cover;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.resize(hash);
        std::istringstream fields(line);
        std::vector<int> patch;
        std::string token;
        while (fields >> token) {
            try {
                std::size_t used = 0;
                int v = std::stoi(token, &used);
                if (used != token.size())
                    throw std::invalid_argument(token);
                patch.push_back(v);
            } catch (const std::exception&) {
                throw input_error("malformed cover line: '" + line + "'");
            }
        }
        if (!patch.empty())
            cover.patches.push_back(std::move(patch));
    }
    return cover;
}

Cover unit_ball_cover(const Graph& g) {
    Cover cover;
    for (int x = 0; x < g.vertex_count(); ++x) {
        std::vector<int> patch = g.neighbors(x);
        patch.push_back(x);
        std::sort(patch.begin(), patch.end());
        cover.patches.push_back(std::move(patch));
    }
    return cover;
}

namespace {

std::vector<int> intersect_sorted(const std::vector<int>& a,
                                  const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(out));
    return out;
}

bool covers_all(const Graph& g, const Cover& cover) {
    std::vector<char> seen(g.vertex_count(), 0);
    for (const auto& patch : cover.patches)
        for (int v : patch) {
            if (v < 0 || v >= g.vertex_count())
                throw input_error("cover patch vertex out of range");
            seen[v] = 1;
        }
    return std::all_of(seen.begin(), seen.end(), [](char s) { return s != 0; });
}

}  // namespace

CoverValidation validate_cover(const Graph& g, const Cover& cover, int order) {
    CoverValidation validation;
    validation.checked_order = order;
    validation.covers = covers_all(g, cover);

    std::vector<std::vector<int>> sorted_patches;
    for (const auto& patch : cover.patches) {
        auto p = patch;
        std::sort(p.begin(), p.end());
        p.erase(std::unique(p.begin(), p.end()), p.end());
        sorted_patches.push_back(std::move(p));
    }
    const int n = static_cast<int>(sorted_patches.size());
    for (int i = 0; i < n; ++i)
        if (contractibility(induced_subgraph(g, sorted_patches[i]).graph) !=
            Contractibility::Yes)
            validation.bad_patches.push_back(i);

    // nonempty intersections up to the requested order
    std::vector<std::pair<std::vector<int>, std::vector<int>>> frontier;
    for (int i = 0; i < n; ++i)
        frontier.push_back({{i}, sorted_patches[i]});
    for (int depth = 2; depth <= order; ++depth) {
        std::vector<std::pair<std::vector<int>, std::vector<int>>> next;
        for (const auto& [indices, vertices] : frontier) {
            for (int j = indices.back() + 1; j < n; ++j) {
                auto common = intersect_sorted(vertices, sorted_patches[j]);
                if (common.empty())
                    continue;
                auto tuple = indices;
                tuple.push_back(j);
                if (contractibility(induced_subgraph(g, common).graph) !=
                    Contractibility::Yes)
                    validation.bad_intersections.push_back(tuple);
                next.push_back({std::move(tuple), std::move(common)});
            }
        }
        frontier = std::move(next);
    }
    return validation;
}

Nerve nerve(const Graph& g, const Cover& cover) {
    if (!covers_all(g, cover))
        throw input_error("patches do not cover the vertex set");
    const int n = static_cast<int>(cover.patches.size());
    std::vector<std::vector<int>> sorted_patches;
    for (const auto& patch : cover.patches) {
        auto p = patch;
        std::sort(p.begin(), p.end());
        sorted_patches.push_back(std::move(p));
    }
    std::vector<std::pair<int, int>> edges;
    std::vector<int> witnesses;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            auto common = intersect_sorted(sorted_patches[i], sorted_patches[j]);
            if (!common.empty()) {
                edges.emplace_back(i, j);
                witnesses.push_back(common.front());
            }
        }
    return {Graph::from_edges(n, std::move(edges)), std::move(witnesses)};
}

CechVerdict cech_betti_check(const Graph& g, const Cover& cover, int order) {
    CechVerdict verdict;
    const CoverValidation validation = validate_cover(g, cover, order);
    if (!validation.valid()) {
        verdict.reason = "not a Cech cover";
        return verdict;
    }
    verdict.valid_cover = true;
    const Nerve n = nerve(g, cover);
    verdict.betti_graph = betti(build_complex(g));
    verdict.betti_nerve = betti(build_complex(n.graph));
    auto padded = [](const BettiVector& b, std::size_t len) {
        BettiVector out = b;
        out.resize(len, 0);
        return out;
    };
    const std::size_t len =
        std::max(verdict.betti_graph.size(), verdict.betti_nerve.size());
    verdict.equal =
        padded(verdict.betti_graph, len) == padded(verdict.betti_nerve, len);
    if (!verdict.equal)
        verdict.reason = "Betti vectors differ";
    return verdict;
}

}  // namespace dirac
