#ifndef DIRAC_SPECTRAL_HPP
#define DIRAC_SPECTRAL_HPP

#include <functional>
#include <string>
#include <vector>

#include "dirac/complex.hpp"
#include "dirac/operators.hpp"
#include "dirac/types.hpp"

namespace dirac {

/**
 * Eigendecomposition of a symmetric real matrix, eigenvalues ascending.
 *
 * grading carries the form degree per eigenpair when the spectrum was
 * aggregated from Laplacian blocks. parity_weight carries <q, P q> per
 * eigenpair of a Dirac spectrum, where P is the (-1)^degree parity sign;
 * it vanishes identically on nonzero eigenvectors, which is the
 * supersymmetry the supertrace identities rest on.
 */
struct Spectrum {
    Vector eigenvalues;
    Matrix eigenvectors;        // columns; empty when not retained
    std::vector<int> grading;
    Vector parity_weight;
    double zero_tolerance = 0.0;

    Index size() const { return eigenvalues.size(); }
    Index zero_count() const;
    Index positive_count() const;
};

/**
 * Dense symmetric eigensolver (Householder tridiagonalization followed by
 * implicit-shift QL, deterministic). Checks symmetry of the input to 1e-12
 * and, when eigenvectors are retained, the reconstruction error
 * |M - Q Lambda Q^T|_max <= 1e-9 * max(1, |M|_max).
 */
Spectrum eigen_sym(const Matrix& m, bool with_vectors = true);

// Eigenvalues of an integer operator matrix, without the vectors.
Vector eigenvalues_only(const IntMatrix& m);

/**
 * Spectrum of the Dirac matrix D, with parity weights. Verifies the negation
 * symmetry of the multiset to 1e-9 and the bound |lambda| <= sqrt(2 deg)
 * (deg the maximal vertex degree); violations raise identity_error.
 */
Spectrum dirac_spectrum(const SimplicialComplex& c);

// All Laplacian block spectra merged ascending, grading = form degree.
Spectrum laplacian_spectrum(const SimplicialComplex& c);

/** One evaluation of the heat-kernel-style supertrace identity. */
struct SuperTraceReport {
    std::string description;
    Complex t{};
    Complex value{};
    long long expected = 0;  // chi(G)
    double deviation = 0.0;
};

/**
 * str(exp(f(D))) for a scalar function f(x, t) with f(0, t) = 0, evaluated
 * through the Dirac eigendecomposition as sum_j <q_j, P q_j> e^{f(lambda_j)}.
 * Enforces |f(0)| <= 1e-12.
 */
SuperTraceReport supertrace(const SimplicialComplex& c,
                            const std::function<Complex(double, Complex)>& f,
                            Complex t, const std::string& description = "f");

// Independent route: per-block Laplacian spectra and the even part of
// e^{f(x)}, using that odd functions of D have empty diagonal.
Complex supertrace_blocks(const SimplicialComplex& c,
                          const std::function<Complex(double, Complex)>& f,
                          Complex t);

/** The (f, t) families used by the verification sweeps. */
struct SuperTraceFunction {
    std::string name;
    std::function<Complex(double, Complex)> f;
};
const std::vector<SuperTraceFunction>& mckean_singer_functions();

/**
 * Product of the nonzero Dirac eigenvalues in (sign, log magnitude) form.
 * The number of excluded zeros is cross-checked against the exact Betti sum;
 * a mismatch raises identity_error rather than re-thresholding.
 */
struct Complexity {
    int sign = 0;               // 0 only when there are no nonzero eigenvalues
    double log_magnitude = 0.0; // natural log of |product|
    Index zero_count = 0;
};

Complexity dirac_complexity(const SimplicialComplex& c);

// sum_i (v_i - b_i) / 2; verified integral and equal to the number of
// positive Dirac eigenvalues.
long long signless_euler_poincare(const SimplicialComplex& c);

/**
 * Per-eigenvalue-cluster table of Laplacian multiplicities across form
 * degrees. Positive clusters must alternate to zero, the zero cluster to
 * chi(G); rows record both. Clusters closer than ten zero-tolerances get a
 * warning instead of silently merging.
 */
struct MultiplicityRow {
    double lambda = 0.0;
    std::vector<Index> dims;      // one entry per form degree
    long long alternating_sum = 0;
    bool is_zero = false;
};

struct MultiplicityTable {
    std::vector<MultiplicityRow> rows;
    std::vector<std::string> warnings;
    double cluster_gap = 0.0;
    double zero_tolerance = 0.0;
};

MultiplicityTable multiplicity_pairing(const SimplicialComplex& c);

// True when every positive row alternates to zero and the zero row matches chi.
bool multiplicity_pairing_ok(const MultiplicityTable& table, long long chi);

}  // namespace dirac

#endif
