#ifndef DIRAC_OPERATORS_HPP
#define DIRAC_OPERATORS_HPP

#include <string>
#include <vector>

#include "dirac/cochain.hpp"
#include "dirac/complex.hpp"
#include "dirac/types.hpp"

namespace dirac {

/**
 * The signed incidence matrix d_p mapping p-forms to (p+1)-forms. Under the
 * canonical increasing-vertex orientation the entry for dropping the k-th
 * vertex of a (p+1)-simplex is (-1)^k; every row has exactly p+2 nonzeros.
 */
struct SignedIncidence {
    int degree = 0;     // p
    Index rows = 0;     // v_{p+1}
    Index cols = 0;     // v_p

    struct Entry {
        Index row;
        Index col;
        int sign;
    };
    std::vector<Entry> entries;

    IntMatrix dense() const;
};

SignedIncidence incidence(const SimplicialComplex& c, int p);
IntMatrix incidence_dense(const SimplicialComplex& c, int p);

/**
 * The Dirac operator D = d + d* as a symmetric v x v integer matrix with
 * entries in {-1, 0, +1}, zero diagonal blocks, and nonzeros only between
 * adjacent form degrees.
 */
struct DiracMatrix {
    IntMatrix matrix;
    std::vector<Index> dim_offsets;  // one entry per form degree, plus v at the end

    Index size() const { return matrix.rows(); }
};

DiracMatrix dirac_matrix(const SimplicialComplex& c);

/** The blocks L_p of L = D^2; block p is v_p x v_p and positive semidefinite. */
struct LaplacianBlocks {
    std::vector<IntMatrix> blocks;

    Index block_count() const { return static_cast<Index>(blocks.size()); }
    IntMatrix assemble() const;  // block-diagonal v x v matrix
};

LaplacianBlocks laplacian(const SimplicialComplex& c);

/**
 * Two Dirac matrices written over the union of the simplex sets of two
 * complexes, padded with zero rows/columns where a simplex is absent. The
 * union is ordered by (dimension, vertex list), so shared simplices index and
 * orient identically in both matrices. The graphs may have different vertex
 * counts; vertices with equal ids are identified.
 */
struct AugmentedPair {
    std::vector<Simplex> union_simplices;
    std::vector<Index> dim_offsets;
    IntMatrix dirac_g;
    IntMatrix dirac_h;
    std::vector<char> in_g;  // membership flags, indexed like union_simplices
    std::vector<char> in_h;

    Index size() const { return dirac_g.rows(); }
};

AugmentedPair augment(const SimplicialComplex& cg, const SimplicialComplex& ch);

// Largest number of codimension-1 incidences of any simplex: the maximum over
// simplices of (faces one dimension down) + (cofaces one dimension up).
int maximal_simplex_degree(const SimplicialComplex& c);

/**
 * Solve L_p A = j on the orthocomplement of ker(L_p) via the
 * eigendecomposition pseudo-inverse. Throws input_error when j has a harmonic
 * component above 1e-8 * max(1, |j|), reporting the offending norm.
 */
Cochain solve_poisson(const SimplicialComplex& c, int p, const Cochain& j);

// Dense CSV and coordinate-triple exports, plus a JSON header carrying the
// block offsets.
std::string matrix_csv(const IntMatrix& m);
std::string matrix_coordinate_text(const IntMatrix& m);
std::string block_offsets_json(const std::vector<Index>& offsets);

}  // namespace dirac

#endif
