#ifndef DIRAC_HOMOTOPY_HPP
#define DIRAC_HOMOTOPY_HPP

#include <string>
#include <vector>

#include "dirac/graph.hpp"
#include "dirac/hodge.hpp"

namespace dirac {

/**
 * Ivashchenko contractibility: a graph reduces to one point by repeatedly
 * removing a vertex whose unit sphere is contractible. The recursion is
 * memoized on vertex subsets; subproblems beyond twelve vertices that cannot
 * be settled structurally (one point, disconnected, cone) come back Undecided.
 */
enum class Contractibility { No, Yes, Undecided };

Contractibility contractibility(const Graph& g);

// Boolean view of the above; Undecided raises input_error.
bool is_contractible(const Graph& g);

/** Greedy contraction: removed vertices keep their original ids. */
struct Contraction {
    Graph reduced;
    std::vector<int> removed;
    std::vector<int> retained_labels;  // original ids of the reduced graph
};

Contraction contract(const Graph& g);

/** A set of vertex patches covering a host graph. */
struct Cover {
    std::vector<std::vector<int>> patches;
};

// One patch per line, vertex ids space-separated; '#' starts a comment.
Cover parse_cover(const std::string& text);
Cover unit_ball_cover(const Graph& g);

/** Validation outcome for a would-be Cech cover. */
struct CoverValidation {
    bool covers = false;
    std::vector<int> bad_patches;  // not contractible (or undecided)
    std::vector<std::vector<int>> bad_intersections;  // patch index tuples
    int checked_order = 2;

    bool valid() const {
        return covers && bad_patches.empty() && bad_intersections.empty();
    }
};

// Checks coverage, patch contractibility, and contractibility of nonempty
// intersections up to the given order (2 = pairwise).
CoverValidation validate_cover(const Graph& g, const Cover& cover, int order = 2);

/** Nerve graph: one vertex per patch, edges for nonempty intersections. */
struct Nerve {
    Graph graph;
    std::vector<int> witnesses;  // one shared vertex per nerve edge
};

Nerve nerve(const Graph& g, const Cover& cover);

/** Betti agreement between a graph and the nerve of a cover of it. */
struct CechVerdict {
    bool valid_cover = false;
    BettiVector betti_graph;
    BettiVector betti_nerve;
    bool equal = false;
    std::string reason;
};

CechVerdict cech_betti_check(const Graph& g, const Cover& cover, int order = 2);

}  // namespace dirac

#endif
