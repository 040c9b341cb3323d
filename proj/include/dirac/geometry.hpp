#ifndef DIRAC_GEOMETRY_HPP
#define DIRAC_GEOMETRY_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <utility>
#include <vector>

#include "dirac/complex.hpp"
#include "dirac/operators.hpp"
#include "dirac/types.hpp"

namespace dirac {

using Rational = boost::multiprecision::cpp_rational;

/**
 * Number of (p+1)-simplices containing the p-simplex x, computed from the
 * Laplacian diagonal (L_p(x,x) - (p+1) for p > 0, L_0(x,x) for vertices) and
 * from a direct coface count; a disagreement raises identity_error.
 */
long long p_degree(const SimplicialComplex& c, const Simplex& x);

/**
 * Degree-sum handshake per form degree, in exact integers:
 * sum_x deg_p(x) = tr(L_p) - (p+1) v_p [p > 0] equals (p+2) v_{p+1}.
 * For p = 0 this is the classical "sum of degrees is twice the edges".
 */
struct HandshakeRow {
    int p = 0;
    long long trace = 0;       // tr(L_p)
    long long degree_sum = 0;  // sum of deg_p over the p-simplices
    long long expected = 0;    // (p+2) v_{p+1}
    bool holds = false;
};

struct HandshakeReport {
    std::vector<HandshakeRow> rows;
    long long str_l_plus_one = 0;  // telescopes to chi(G)
    long long chi = 0;
    bool ok = false;
};

HandshakeReport handshake_check(const SimplicialComplex& c);

/**
 * Walks of length k from x to y along codimension-1 incidences. A walk fixes
 * with its first move which pair of adjacent dimensions it lives in and never
 * leaves that corridor.
 */
long long count_paths(const SimplicialComplex& c, const Simplex& x,
                      const Simplex& y, int k);

// Entry of the integer matrix power D^k at the global indices of x and y.
long long dirac_power_entry(const SimplicialComplex& c, const Simplex& x,
                            const Simplex& y, int k);

// Closed walks of length 2k split by the parity of the starting dimension
// (diagonal sums of D^{2k}); the two totals agree for every complex.
std::pair<long long, long long> closed_path_parity(const SimplicialComplex& c,
                                                   int k);

/**
 * Combinatorial curvature K(x) = sum_k (-1)^k V_{k-1}(x)/(k+1) with
 * V_{-1} = 1 and V_k(x) the number of K_{k+1} subgraphs of the unit sphere,
 * in exact rational arithmetic. The total equals chi(G) (Gauss-Bonnet) and
 * each vertex value is cross-checked against the operator form built from
 * the sphere's Laplacian block traces; failures raise identity_error.
 */
struct CurvatureReport {
    std::vector<Rational> curvature;           // per vertex, clique-count form
    std::vector<Rational> curvature_operator;  // per vertex, str(L'') form
    std::vector<std::vector<long long>> sphere_counts;  // V_k(x) per vertex
    Rational total = 0;
};

CurvatureReport curvature(const Graph& g);

// |symmetric difference| / |union| of the two simplex sets (vertices with
// equal ids are identified).
Rational simplex_distance(const SimplicialComplex& cg, const SimplicialComplex& ch);

/** Sorted-eigenvalue l1 distance of the augmented Dirac matrices, with the
 *  perturbation bound 2 deg d(G,H). */
struct DistanceReport {
    Rational simplex_distance = 0;
    double spectral_distance = 0.0;
    double lidskii_bound = 0.0;
    int max_degree_used = 0;  // maximal simplex degree over both complexes
};

DistanceReport spectral_distance(const SimplicialComplex& cg,
                                 const SimplicialComplex& ch);

/** One instance of the Lidskii inequality sum |a_j - b_j| <= sum |A-B|_ij. */
struct LidskiiCheck {
    double lhs = 0.0;
    double rhs = 0.0;
    bool holds = false;
};

LidskiiCheck lidskii_check(const Matrix& a, const Matrix& b);

enum class SpectralLevel { Adjacency, L0, AllForms, Dirac };

/** Per-level cospectrality comparison of two complexes. */
struct IsospectralVerdict {
    bool isospectral = false;
    std::string level;            // requested level
    std::string differing_level;  // empty when isospectral
    double max_difference = 0.0;
};

IsospectralVerdict isospectral_check(const SimplicialComplex& cg,
                                     const SimplicialComplex& ch,
                                     SpectralLevel level, double tol = 1e-8);

}  // namespace dirac

#endif
