#include "dirac/operators.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <sstream>

#include "dirac/errors.hpp"

namespace dirac {

IntMatrix SignedIncidence::dense() const {
    IntMatrix m = IntMatrix::Zero(rows, cols);
    for (const Entry& e : entries)
        m(e.row, e.col) = e.sign;
    return m;
}

SignedIncidence incidence(const SimplicialComplex& c, int p) {
    if (p < 0 || p >= c.top_dimension())
        throw input_error("incidence degree out of range");
    SignedIncidence d;
    d.degree = p;
    d.rows = c.count(p + 1);
    d.cols = c.count(p);
    const auto& upper = c.simplices(p + 1);
    for (Index r = 0; r < d.rows; ++r) {
        const Simplex& s = upper[r];
        Simplex face;
        face.vertices.resize(s.vertices.size() - 1);
        int sign = 1;
        for (std::size_t k = 0; k < s.vertices.size(); ++k) {
            std::size_t out = 0;
            for (std::size_t m = 0; m < s.vertices.size(); ++m)
                if (m != k)
                    face.vertices[out++] = s.vertices[m];
            auto col = c.position_of(face);
            if (!col)
                throw identity_error("complex is not closed under faces");
            d.entries.push_back({r, *col, sign});
            sign = -sign;
        }
    }
    return d;
}

IntMatrix incidence_dense(const SimplicialComplex& c, int p) {
    return incidence(c, p).dense();
}

DiracMatrix dirac_matrix(const SimplicialComplex& c) {
    DiracMatrix result;
    result.matrix = IntMatrix::Zero(c.total(), c.total());
    for (int p = 0; p <= c.top_dimension(); ++p)
        result.dim_offsets.push_back(c.offset(p));
    result.dim_offsets.push_back(c.total());
    for (int p = 0; p + 1 <= c.top_dimension(); ++p) {
        const Index row0 = c.offset(p + 1);
        const Index col0 = c.offset(p);
        for (const auto& e : incidence(c, p).entries) {
            result.matrix(row0 + e.row, col0 + e.col) = e.sign;
            result.matrix(col0 + e.col, row0 + e.row) = e.sign;
        }
    }
    return result;
}

IntMatrix LaplacianBlocks::assemble() const {
    Index v = 0;
    for (const auto& b : blocks)
        v += b.rows();
    IntMatrix full = IntMatrix::Zero(v, v);
    Index at = 0;
    for (const auto& b : blocks) {
        full.block(at, at, b.rows(), b.rows()) = b;
        at += b.rows();
    }
    return full;
}

LaplacianBlocks laplacian(const SimplicialComplex& c) {
    LaplacianBlocks result;
    for (int p = 0; p <= c.top_dimension(); ++p) {
        IntMatrix block = IntMatrix::Zero(c.count(p), c.count(p));
        if (p < c.top_dimension()) {
            IntMatrix d = incidence_dense(c, p);
            block += d.transpose() * d;
        }
        if (p > 0) {
            IntMatrix d = incidence_dense(c, p - 1);
            block += d * d.transpose();
        }
        result.blocks.push_back(std::move(block));
    }
    return result;
}

namespace {

// Union simplex list with membership flags and per-complex index maps.
struct UnionIndex {
    std::vector<Simplex> simplices;
    std::vector<Index> dim_offsets;
    std::vector<char> in_g, in_h;

    Index find(const Simplex& s) const {
        // simplices is sorted by (dimension, vertices)
        auto cmp = [](const Simplex& a, const Simplex& b) {
            if (a.dimension() != b.dimension())
                return a.dimension() < b.dimension();
            return a.vertices < b.vertices;
        };
        auto it = std::lower_bound(simplices.begin(), simplices.end(), s, cmp);
        return static_cast<Index>(it - simplices.begin());
    }
};

IntMatrix padded_dirac(const SimplicialComplex& c, const UnionIndex& u) {
    const Index v = static_cast<Index>(u.simplices.size());
    IntMatrix m = IntMatrix::Zero(v, v);
    for (int p = 0; p + 1 <= c.top_dimension(); ++p) {
        for (const Simplex& s : c.simplices(p + 1)) {
            Index row = u.find(s);
            Simplex face;
            face.vertices.resize(s.vertices.size() - 1);
            int sign = 1;
            for (std::size_t k = 0; k < s.vertices.size(); ++k) {
                std::size_t out = 0;
                for (std::size_t i = 0; i < s.vertices.size(); ++i)
                    if (i != k)
                        face.vertices[out++] = s.vertices[i];
                Index col = u.find(face);
                m(row, col) = sign;
                m(col, row) = sign;
                sign = -sign;
            }
        }
    }
    return m;
}

}  // namespace

AugmentedPair augment(const SimplicialComplex& cg, const SimplicialComplex& ch) {
    UnionIndex u;
    int top = std::max(cg.top_dimension(), ch.top_dimension());
    for (int p = 0; p <= top; ++p) {
        u.dim_offsets.push_back(static_cast<Index>(u.simplices.size()));
        const auto& a = cg.simplices(p);
        const auto& b = ch.simplices(p);
        std::vector<Simplex> merged;
        std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                       std::back_inserter(merged));
        for (auto& s : merged)
            u.simplices.push_back(std::move(s));
    }
    u.dim_offsets.push_back(static_cast<Index>(u.simplices.size()));
    for (const Simplex& s : u.simplices) {
        u.in_g.push_back(cg.contains(s) ? 1 : 0);
        u.in_h.push_back(ch.contains(s) ? 1 : 0);
    }
    AugmentedPair pair;
    pair.dirac_g = padded_dirac(cg, u);
    pair.dirac_h = padded_dirac(ch, u);
    pair.union_simplices = std::move(u.simplices);
    pair.dim_offsets = std::move(u.dim_offsets);
    pair.in_g = std::move(u.in_g);
    pair.in_h = std::move(u.in_h);
    return pair;
}

int maximal_simplex_degree(const SimplicialComplex& c) {
    if (c.total() == 0)
        return 0;
    std::vector<int> incidences(c.total(), 0);
    for (int p = 0; p + 1 <= c.top_dimension(); ++p) {
        const Index row0 = c.offset(p + 1);
        const Index col0 = c.offset(p);
        for (const auto& e : incidence(c, p).entries) {
            ++incidences[col0 + e.col];  // coface of the p-simplex
            ++incidences[row0 + e.row];  // face of the (p+1)-simplex
        }
    }
    return *std::max_element(incidences.begin(), incidences.end());
}

Cochain solve_poisson(const SimplicialComplex& c, int p, const Cochain& j) {
    if (p < 0 || p > c.top_dimension())
        throw input_error("form degree out of range");
    Cochain rhs = restrict_to_degree(c, j, p);
    const Matrix block = laplacian(c).blocks[p].cast<double>();
    Eigen::SelfAdjointEigenSolver<Matrix> es(block);
    const Vector& mu = es.eigenvalues();
    const Matrix& q = es.eigenvectors();
    const double lambda_max = mu.size() > 0 ? std::abs(mu(mu.size() - 1)) : 0.0;
    const double zero_tol = 1e-9 * std::max(1.0, lambda_max);

    ComplexVector coeffs = q.transpose().cast<Complex>() * rhs.values;
    double harmonic_norm_sq = 0.0;
    for (Index i = 0; i < mu.size(); ++i)
        if (mu(i) <= zero_tol)
            harmonic_norm_sq += std::norm(coeffs(i));
    const double harmonic_norm = std::sqrt(harmonic_norm_sq);
    if (harmonic_norm > 1e-8 * std::max(1.0, rhs.norm())) {
        std::ostringstream msg;
        msg << "poisson system unsolvable: harmonic component of j has norm "
            << harmonic_norm;
        throw input_error(msg.str());
    }

    ComplexVector solution_coeffs = ComplexVector::Zero(mu.size());
    for (Index i = 0; i < mu.size(); ++i)
        if (mu(i) > zero_tol)
            solution_coeffs(i) = coeffs(i) / mu(i);
    Cochain a{q.cast<Complex>() * solution_coeffs, p};

    double residual = (block.cast<Complex>() * a.values - rhs.values).norm();
    if (residual > 1e-8 * std::max(1.0, rhs.norm()))
        throw identity_error("poisson residual above tolerance");
    return a;
}

std::string matrix_csv(const IntMatrix& m) {
    std::ostringstream out;
    for (Index r = 0; r < m.rows(); ++r) {
        for (Index col = 0; col < m.cols(); ++col) {
            if (col)
                out << ',';
            out << m(r, col);
        }
        out << '\n';
    }
    return out.str();
}

std::string matrix_coordinate_text(const IntMatrix& m) {
    std::ostringstream out;
    for (Index r = 0; r < m.rows(); ++r)
        for (Index col = 0; col < m.cols(); ++col)
            if (m(r, col) != 0)
                out << r << ' ' << col << ' ' << m(r, col) << '\n';
    return out.str();
}

std::string block_offsets_json(const std::vector<Index>& offsets) {
    std::ostringstream out;
    out << "{\"dim_offsets\":[";
    for (std::size_t i = 0; i < offsets.size(); ++i) {
        if (i)
            out << ',';
        out << offsets[i];
    }
    out << "]}";
    return out.str();
}

}  // namespace dirac
