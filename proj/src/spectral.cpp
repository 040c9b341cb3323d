#include "dirac/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "dirac/errors.hpp"
#include "dirac/hodge.hpp"

namespace dirac {

namespace {

double matrix_max_abs(const Matrix& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double spectrum_zero_tolerance(const Vector& eigenvalues) {
    double lambda_max = 0.0;
    if (eigenvalues.size() > 0)
        lambda_max = eigenvalues.cwiseAbs().maxCoeff();
    return 1e-9 * std::max(1.0, lambda_max);
}

}  // namespace

Index Spectrum::zero_count() const {
    Index n = 0;
    for (Index i = 0; i < eigenvalues.size(); ++i)
        if (std::abs(eigenvalues(i)) <= zero_tolerance)
            ++n;
    return n;
}

Index Spectrum::positive_count() const {
    Index n = 0;
    for (Index i = 0; i < eigenvalues.size(); ++i)
        if (eigenvalues(i) > zero_tolerance)
            ++n;
    return n;
}

Spectrum eigen_sym(const Matrix& m, bool with_vectors) {
    if (m.rows() != m.cols())
        throw input_error("eigen_sym needs a square matrix");
    if (m.size() > 0 && matrix_max_abs(m - m.transpose()) > 1e-12)
        throw input_error("eigen_sym needs a symmetric matrix");

    Spectrum s;
    if (m.rows() == 0) {
        s.eigenvalues = Vector();
        s.eigenvectors = Matrix();
        s.zero_tolerance = 1e-9;
        return s;
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es(
        m, with_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
        throw identity_error("eigendecomposition did not converge");
    s.eigenvalues = es.eigenvalues();
    if (with_vectors) {
        s.eigenvectors = es.eigenvectors();
        const double scale = std::max(1.0, matrix_max_abs(m));
        const Matrix reconstructed = s.eigenvectors *
                                     s.eigenvalues.asDiagonal() *
                                     s.eigenvectors.transpose();
        if (matrix_max_abs(m - reconstructed) > 1e-9 * scale)
            throw identity_error("eigendecomposition reconstruction error above tolerance");
    }
    s.zero_tolerance = spectrum_zero_tolerance(s.eigenvalues);
    return s;
}

Vector eigenvalues_only(const IntMatrix& m) {
    if (m.rows() == 0)
        return Vector();
    Eigen::SelfAdjointEigenSolver<Matrix> es(m.cast<double>(),
                                             Eigen::EigenvaluesOnly);
    return es.eigenvalues();
}

Spectrum dirac_spectrum(const SimplicialComplex& c) {
    const DiracMatrix d = dirac_matrix(c);
    Spectrum s = eigen_sym(d.matrix.cast<double>());

    // parity weights <q, P q>
    Vector parity(c.total());
    for (Index i = 0; i < c.total(); ++i)
        parity(i) = c.dimension_at(i) % 2 == 0 ? 1.0 : -1.0;
    s.parity_weight = Vector(s.size());
    for (Index j = 0; j < s.size(); ++j)
        s.parity_weight(j) = s.eigenvectors.col(j).dot(
            parity.cwiseProduct(s.eigenvectors.col(j)));

    // negation symmetry of the multiset
    for (Index j = 0; j < s.size(); ++j) {
        double mirrored = -s.eigenvalues(s.size() - 1 - j);
        if (std::abs(s.eigenvalues(j) - mirrored) > 1e-9)
            throw identity_error("Dirac spectrum is not symmetric under negation");
    }

    // |lambda| <= sqrt(2 deg) with deg the maximal vertex degree
    if (s.size() > 0) {
        double bound = std::sqrt(2.0 * c.graph().max_degree()) + 1e-9;
        if (s.eigenvalues.cwiseAbs().maxCoeff() > bound)
            throw identity_error("Dirac eigenvalue outside [-sqrt(2 deg), sqrt(2 deg)]");
    }
    return s;
}

Spectrum laplacian_spectrum(const SimplicialComplex& c) {
    const LaplacianBlocks l = laplacian(c);
    std::vector<std::pair<double, int>> entries;
    for (int p = 0; p < l.block_count(); ++p) {
        Vector mu = eigenvalues_only(l.blocks[p]);
        for (Index i = 0; i < mu.size(); ++i)
            entries.emplace_back(mu(i), p);
    }
    std::stable_sort(entries.begin(), entries.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    Spectrum s;
    s.eigenvalues = Vector(static_cast<Index>(entries.size()));
    s.grading.resize(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
        s.eigenvalues(static_cast<Index>(i)) = entries[i].first;
        s.grading[i] = entries[i].second;
    }
    s.zero_tolerance = spectrum_zero_tolerance(s.eigenvalues);
    return s;
}

SuperTraceReport supertrace(const SimplicialComplex& c,
                            const std::function<Complex(double, Complex)>& f,
                            Complex t, const std::string& description) {
    if (std::abs(f(0.0, t)) > 1e-12)
        throw input_error("supertrace needs f(0) = 0");
    const Spectrum s = dirac_spectrum(c);
    Complex value = 0.0;
    for (Index j = 0; j < s.size(); ++j)
        value += s.parity_weight(j) * std::exp(f(s.eigenvalues(j), t));
    SuperTraceReport report;
    report.description = description;
    report.t = t;
    report.value = value;
    report.expected = euler_characteristic(c);
    report.deviation = std::abs(value - Complex(static_cast<double>(report.expected)));
    return report;
}

Complex supertrace_blocks(const SimplicialComplex& c,
                          const std::function<Complex(double, Complex)>& f,
                          Complex t) {
    if (std::abs(f(0.0, t)) > 1e-12)
        throw input_error("supertrace needs f(0) = 0");
    const LaplacianBlocks l = laplacian(c);
    Complex value = 0.0;
    for (int p = 0; p < l.block_count(); ++p) {
        const double sign = p % 2 == 0 ? 1.0 : -1.0;
        Vector mu = eigenvalues_only(l.blocks[p]);
        for (Index i = 0; i < mu.size(); ++i) {
            double lambda = std::sqrt(std::max(0.0, mu(i)));
            // Odd functions of D have empty diagonal, so only the even part
            // of e^{f} contributes to the block trace.
            Complex even = 0.5 * (std::exp(f(lambda, t)) + std::exp(f(-lambda, t)));
            value += sign * even;
        }
    }
    return value;
}

const std::vector<SuperTraceFunction>& mckean_singer_functions() {
    static const std::vector<SuperTraceFunction> functions = {
        {"heat", [](double x, Complex t) { return -t * x * x; }},
        {"schrodinger", [](double x, Complex t) { return Complex(0, 1) * t * x; }},
        {"sine", [](double x, Complex t) { return std::sin(t * x); }},
        {"quartic", [](double x, Complex t) { return t * x * x * x * x; }},
    };
    return functions;
}

Complexity dirac_complexity(const SimplicialComplex& c) {
    const Spectrum s = dirac_spectrum(c);
    Complexity result;
    result.sign = 1;
    Index nonzero = 0;
    for (Index j = 0; j < s.size(); ++j) {
        double lambda = s.eigenvalues(j);
        if (std::abs(lambda) <= s.zero_tolerance)
            continue;
        ++nonzero;
        result.log_magnitude += std::log(std::abs(lambda));
        if (lambda < 0)
            result.sign = -result.sign;
    }
    if (nonzero == 0)
        result.sign = 0;
    result.zero_count = s.size() - nonzero;

    const BettiVector b = betti(c);
    long long betti_sum = std::accumulate(b.begin(), b.end(), 0LL);
    if (result.zero_count != betti_sum)
        throw identity_error(
            "Dirac kernel dimension " + std::to_string(result.zero_count) +
            " does not match the Betti sum " + std::to_string(betti_sum));
    return result;
}

long long signless_euler_poincare(const SimplicialComplex& c) {
    const BettiVector b = betti(c);
    long long total = 0;
    for (int p = 0; p <= c.top_dimension(); ++p) {
        long long bp = p < static_cast<int>(b.size()) ? b[p] : 0;
        total += static_cast<long long>(c.count(p)) - bp;
    }
    if (total % 2 != 0)
        throw identity_error("sum of (v_i - b_i) is odd");
    const long long pairs = total / 2;
    const long long positive = dirac_spectrum(c).positive_count();
    if (pairs != positive)
        throw identity_error("eigenvalue pair count " + std::to_string(positive) +
                             " does not match (v - b)/2 = " + std::to_string(pairs));
    return pairs;
}

MultiplicityTable multiplicity_pairing(const SimplicialComplex& c) {
    MultiplicityTable table;
    table.cluster_gap = 1e-7;

    const Spectrum s = laplacian_spectrum(c);
    table.zero_tolerance = s.zero_tolerance;
    const int degrees = c.top_dimension() + 1;
    if (s.size() == 0)
        return table;

    std::vector<std::pair<Index, Index>> clusters;  // [begin, end)
    Index begin = 0;
    for (Index i = 1; i <= s.size(); ++i) {
        bool split = i == s.size();
        if (!split) {
            double gap = s.eigenvalues(i) - s.eigenvalues(i - 1);
            split = gap > table.cluster_gap * std::max(1.0, std::abs(s.eigenvalues(i)));
        }
        if (split) {
            clusters.emplace_back(begin, i);
            begin = i;
        }
    }

    for (std::size_t k = 0; k < clusters.size(); ++k) {
        auto [lo, hi] = clusters[k];
        MultiplicityRow row;
        row.dims.assign(degrees, 0);
        double mean = 0.0;
        for (Index i = lo; i < hi; ++i) {
            mean += s.eigenvalues(i);
            ++row.dims[s.grading[i]];
        }
        row.lambda = mean / static_cast<double>(hi - lo);
        row.is_zero = std::abs(row.lambda) <= s.zero_tolerance;
        long long sum = 0;
        for (int p = 0; p < degrees; ++p)
            sum += (p % 2 == 0 ? 1 : -1) * static_cast<long long>(row.dims[p]);
        row.alternating_sum = sum;
        table.rows.push_back(std::move(row));

        if (k > 0) {
            double gap = s.eigenvalues(lo) - s.eigenvalues(lo - 1);
            if (gap < 10.0 * s.zero_tolerance) {
                std::ostringstream msg;
                msg << "clusters around " << table.rows[k - 1].lambda << " and "
                    << table.rows[k].lambda << " are separated by only " << gap;
                table.warnings.push_back(msg.str());
            }
        }
    }
    return table;
}

bool multiplicity_pairing_ok(const MultiplicityTable& table, long long chi) {
    for (const auto& row : table.rows) {
        if (row.is_zero) {
            if (row.alternating_sum != chi)
                return false;
        } else if (row.alternating_sum != 0) {
            return false;
        }
    }
    return true;
}

}  // namespace dirac
