#include "dirac/hodge.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <numeric>

#include "dirac/errors.hpp"
#include "dirac/spectral.hpp"

namespace dirac {

namespace {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace

Index rational_rank(const IntMatrix& m) {
    const Index rows = m.rows(), cols = m.cols();
    if (rows == 0 || cols == 0)
        return 0;
    std::vector<std::vector<BigInt>> a(rows, std::vector<BigInt>(cols));
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j)
            a[i][j] = m(i, j);

    Index rank = 0;
    BigInt previous_pivot = 1;
    for (Index col = 0; col < cols && rank < rows; ++col) {
        // partial pivoting by magnitude
        Index pivot_row = -1;
        BigInt best = 0;
        for (Index i = rank; i < rows; ++i) {
            BigInt magnitude = abs(a[i][col]);
            if (magnitude > best) {
                best = magnitude;
                pivot_row = i;
            }
        }
        if (pivot_row < 0)
            continue;
        std::swap(a[rank], a[pivot_row]);
        const BigInt pivot = a[rank][col];
        for (Index i = rank + 1; i < rows; ++i) {
            for (Index j = col + 1; j < cols; ++j) {
                BigInt numerator = a[i][j] * pivot - a[i][col] * a[rank][j];
                BigInt quotient, remainder;
                divide_qr(numerator, previous_pivot, quotient, remainder);
                if (remainder != 0)
                    throw identity_error("fraction-free elimination lost exactness");
                a[i][j] = std::move(quotient);
            }
            a[i][col] = 0;
        }
        previous_pivot = pivot;
        ++rank;
    }
    return rank;
}

BettiVector betti(const SimplicialComplex& c) {
    BettiVector b;
    const int top = c.top_dimension();
    if (top < 0)
        return b;
    std::vector<Index> ranks(top + 1, 0);  // ranks[p] = rank(d_p); rank(d_top) = 0
    for (int p = 0; p < top; ++p)
        ranks[p] = rational_rank(incidence_dense(c, p));
    for (int p = 0; p <= top; ++p) {
        long long lower = p > 0 ? ranks[p - 1] : 0;
        b.push_back(static_cast<long long>(c.count(p)) - ranks[p] - lower);
        if (b.back() < 0 || b.back() > c.count(p))
            throw identity_error("Betti number out of range");
    }
    long long chi_from_betti = 0, sign = 1;
    for (long long bp : b) {
        chi_from_betti += sign * bp;
        sign = -sign;
    }
    if (chi_from_betti != euler_characteristic(c))
        throw identity_error("Betti alternating sum does not match the Euler characteristic");
    return b;
}

std::vector<Cochain> harmonic_basis(const SimplicialComplex& c, int p) {
    if (p < 0 || p > c.top_dimension())
        throw input_error("form degree out of range");
    const long long expected = betti(c)[p];
    const Spectrum s = eigen_sym(laplacian(c).blocks[p].cast<double>());
    std::vector<Cochain> basis;
    for (Index i = 0; i < s.size(); ++i)
        if (std::abs(s.eigenvalues(i)) <= s.zero_tolerance)
            basis.push_back(make_cochain(Vector(s.eigenvectors.col(i)), p));
    if (static_cast<long long>(basis.size()) != expected)
        throw identity_error("numeric kernel dimension " + std::to_string(basis.size()) +
                             " disagrees with the exact Betti number " +
                             std::to_string(expected));

    const Matrix d_up =
        p < c.top_dimension() ? incidence_dense(c, p).cast<double>() : Matrix();
    const Matrix d_down_t =
        p > 0 ? Matrix(incidence_dense(c, p - 1).cast<double>().transpose()) : Matrix();
    for (const Cochain& f : basis) {
        if (d_up.size() > 0 && (d_up.cast<Complex>() * f.values).norm() > 1e-8)
            throw identity_error("harmonic vector is not closed");
        if (d_down_t.size() > 0 && (d_down_t.cast<Complex>() * f.values).norm() > 1e-8)
            throw identity_error("harmonic vector is not coclosed");
    }
    return basis;
}

HodgeSplit hodge_decompose(const SimplicialComplex& c, int p, const Cochain& g) {
    if (p < 0 || p > c.top_dimension())
        throw input_error("form degree out of range");
    const Cochain input = restrict_to_degree(c, g, p);

    HodgeSplit split{zero_cochain(c, p), zero_cochain(c, p), zero_cochain(c, p)};
    for (const Cochain& h : harmonic_basis(c, p))
        split.harmonic.values += h.values.dot(input.values) * h.values;

    if (p > 0) {
        ComplexMatrix d = incidence_dense(c, p - 1).cast<Complex>();
        ComplexVector primitive =
            d.completeOrthogonalDecomposition().solve(input.values);
        split.exact.values = d * primitive;
    }
    if (p < c.top_dimension()) {
        ComplexMatrix dt =
            incidence_dense(c, p).cast<Complex>().transpose();
        ComplexVector primitive =
            dt.completeOrthogonalDecomposition().solve(input.values);
        split.coexact.values = dt * primitive;
    }

    const double scale = std::max(1.0, input.norm());
    ComplexVector sum =
        split.exact.values + split.coexact.values + split.harmonic.values;
    if ((sum - input.values).norm() > 1e-8 * scale)
        throw identity_error("Hodge decomposition does not reproduce the input");
    return split;
}

}  // namespace dirac
