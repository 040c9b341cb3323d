#ifndef DIRAC_COCHAIN_HPP
#define DIRAC_COCHAIN_HPP

#include "dirac/complex.hpp"
#include "dirac/types.hpp"

namespace dirac {

/**
 * A function on simplices. With degree < 0 the values run over the full
 * stacked simplex ordering (length v); with degree = p they run over the
 * p-simplices only (length v_p).
 */
struct Cochain {
    ComplexVector values;
    int degree = -1;

    Index size() const { return values.size(); }
    double norm() const { return values.norm(); }
};

// Zero cochain of the right length for the complex.
Cochain zero_cochain(const SimplicialComplex& c, int degree = -1);

// Real-vector convenience constructors.
Cochain make_cochain(const Vector& values, int degree = -1);
Cochain make_cochain(const ComplexVector& values, int degree = -1);

// Checks that a cochain fits the complex at the stated degree.
void check_cochain(const SimplicialComplex& c, const Cochain& f);

// Restriction of a full cochain to one degree block, and the reverse embedding.
Cochain restrict_to_degree(const SimplicialComplex& c, const Cochain& f, int p);
Cochain embed_degree(const SimplicialComplex& c, const Cochain& f);

}  // namespace dirac

#endif
