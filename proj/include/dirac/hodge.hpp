#ifndef DIRAC_HODGE_HPP
#define DIRAC_HODGE_HPP

#include <vector>

#include "dirac/cochain.hpp"
#include "dirac/complex.hpp"
#include "dirac/operators.hpp"

namespace dirac {

using BettiVector = std::vector<long long>;

// Exact rank over the rationals: fraction-free (Bareiss) elimination with
// partial pivoting by magnitude, arbitrary-precision integers throughout.
Index rational_rank(const IntMatrix& m);

/**
 * Betti numbers b_p = v_p - rank(d_p) - rank(d_{p-1}) from exact ranks.
 * The Euler-Poincare identity against the f-vector is verified on the way
 * out; a mismatch raises identity_error.
 */
BettiVector betti(const SimplicialComplex& c);

/**
 * Orthonormal basis of ker(L_p), exactly b_p vectors. The count is validated
 * against the exact Betti number (hard failure, no re-thresholding) and each
 * vector satisfies |d f| <= 1e-8 and |d* f| <= 1e-8.
 */
std::vector<Cochain> harmonic_basis(const SimplicialComplex& c, int p);

/** Orthogonal decomposition g = exact + coexact + harmonic. */
struct HodgeSplit {
    Cochain exact;     // in im(d_{p-1})
    Cochain coexact;   // in im(d_p^*)
    Cochain harmonic;  // in ker(L_p)
};

HodgeSplit hodge_decompose(const SimplicialComplex& c, int p, const Cochain& g);

}  // namespace dirac

#endif
