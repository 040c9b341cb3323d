#include <doctest.h>

#include "dirac/errors.hpp"
#include "dirac/operators.hpp"
#include "dirac/spectral.hpp"
#include "test_helpers.hpp"

using namespace dirac;

namespace {

IntMatrix from_rows(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    IntMatrix m(static_cast<Index>(rows.size()),
                static_cast<Index>(rows.begin()->size()));
    Index r = 0;
    for (const auto& row : rows) {
        Index col = 0;
        for (std::int64_t x : row)
            m(r, col++) = x;
        ++r;
    }
    return m;
}

}  // namespace

TEST_CASE("incidence matrices of small complexes") {
    // one edge: a single face map
    const SimplicialComplex edge = build_complex(generate("path", 2));
    CHECK(incidence_dense(edge, 0) == from_rows({{-1, 1}}));

    // triangle: the 2-simplex in increasing orientation
    const SimplicialComplex triangle = build_complex(generate("complete", 3));
    CHECK(incidence_dense(triangle, 1) == from_rows({{1, -1, 1}}));

    // K4, vertex-to-edge and edge-to-triangle maps
    const SimplicialComplex k4 = build_complex(generate("complete", 4));
    CHECK(incidence_dense(k4, 0) == from_rows({{-1, 1, 0, 0},
                                               {-1, 0, 1, 0},
                                               {-1, 0, 0, 1},
                                               {0, -1, 1, 0},
                                               {0, -1, 0, 1},
                                               {0, 0, -1, 1}}));
    CHECK(incidence_dense(k4, 1) == from_rows({{1, -1, 0, 1, 0, 0},
                                               {1, 0, -1, 0, 1, 0},
                                               {0, 1, -1, 0, 0, 1},
                                               {0, 0, 0, 1, -1, 1}}));

    CHECK_THROWS_AS(incidence(triangle, 2), input_error);
    CHECK_THROWS_AS(incidence(triangle, -1), input_error);
}

TEST_CASE("d composed with d vanishes exactly") {
    for (const Graph& g : testing::generator_fixtures()) {
        const SimplicialComplex c = build_complex(g);
        for (int p = 0; p + 1 < c.top_dimension(); ++p) {
            const IntMatrix product =
                incidence_dense(c, p + 1) * incidence_dense(c, p);
            CHECK(product.cwiseAbs().maxCoeff() == 0);
        }
        // each row of d_p has exactly p+2 nonzero entries
        for (int p = 0; p < c.top_dimension(); ++p) {
            const SignedIncidence d = incidence(c, p);
            std::vector<int> per_row(d.rows, 0);
            for (const auto& e : d.entries)
                ++per_row[e.row];
            for (int count : per_row)
                CHECK(count == p + 2);
        }
    }
}

TEST_CASE("Dirac matrix structure") {
    for (const Graph& g : testing::generator_fixtures()) {
        const SimplicialComplex c = build_complex(g);
        const DiracMatrix d = dirac_matrix(c);
        CHECK(d.matrix == IntMatrix(d.matrix.transpose()));
        CHECK(d.matrix.cwiseAbs().maxCoeff() <= 1);
        for (Index i = 0; i < d.size(); ++i) {
            CHECK(d.matrix(i, i) == 0);
            for (Index j = 0; j < d.size(); ++j)
                if (d.matrix(i, j) != 0)
                    CHECK(std::abs(c.dimension_at(i) - c.dimension_at(j)) == 1);
        }
        // D^2 is block diagonal with the Laplacian blocks
        const IntMatrix square = d.matrix * d.matrix;
        CHECK(square == laplacian(c).assemble());
    }
}

TEST_CASE("triangle Dirac matrix") {
    const SimplicialComplex c = build_complex(generate("complete", 3));
    const IntMatrix expected = from_rows({{0, 0, 0, -1, -1, 0, 0},
                                          {0, 0, 0, 1, 0, -1, 0},
                                          {0, 0, 0, 0, 1, 1, 0},
                                          {-1, 1, 0, 0, 0, 0, 1},
                                          {-1, 0, 1, 0, 0, 0, -1},
                                          {0, -1, 1, 0, 0, 0, 1},
                                          {0, 0, 0, 1, -1, 1, 0}});
    CHECK(dirac_matrix(c).matrix == expected);
    CHECK(dirac_matrix(build_complex(generate("path", 1))).matrix ==
          IntMatrix::Zero(1, 1));
}

TEST_CASE("Laplacian blocks of small fixtures") {
    const SimplicialComplex triangle = build_complex(generate("complete", 3));
    const LaplacianBlocks lt = laplacian(triangle);
    CHECK(lt.blocks[0] == from_rows({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}));
    CHECK(lt.blocks[1] == IntMatrix(3 * IntMatrix::Identity(3, 3)));
    CHECK(lt.blocks[2] == from_rows({{3}}));

    const SimplicialComplex k4 = build_complex(generate("complete", 4));
    const LaplacianBlocks lk = laplacian(k4);
    CHECK(lk.blocks[1] == IntMatrix(4 * IntMatrix::Identity(6, 6)));
    CHECK(lk.blocks[2] == IntMatrix(4 * IntMatrix::Identity(4, 4)));

    // L_0 = degree matrix minus adjacency
    const Graph wheel = generate("wheel", 5);
    const SimplicialComplex cw = build_complex(wheel);
    const IntMatrix l0 = laplacian(cw).blocks[0];
    for (int i = 0; i < wheel.vertex_count(); ++i) {
        CHECK(l0(i, i) == wheel.degree(i));
        for (int j = 0; j < wheel.vertex_count(); ++j)
            if (i != j)
                CHECK(l0(i, j) == (wheel.has_edge(i, j) ? -1 : 0));
    }

    CHECK(laplacian(build_complex(Graph::from_edges(4, {}))).blocks[0] ==
          IntMatrix::Zero(4, 4));

    // C_4: both blocks carry the circulant spectrum {0, 2, 2, 4}
    const SimplicialComplex c4 = build_complex(generate("cycle", 4));
    const LaplacianBlocks lc = laplacian(c4);
    CHECK(lc.blocks[0] ==
          from_rows({{2, -1, 0, -1}, {-1, 2, -1, 0}, {0, -1, 2, -1}, {-1, 0, -1, 2}}));
    for (int p : {0, 1})
        CHECK(testing::multisets_close(testing::to_vector(eigenvalues_only(lc.blocks[p])),
                                       {0, 2, 2, 4}, 1e-9));
}

TEST_CASE("diagonal entries count attached simplices") {
    for (const Graph& g : testing::generator_fixtures()) {
        const SimplicialComplex c = build_complex(g);
        const LaplacianBlocks l = laplacian(c);
        for (int p = 1; p <= c.top_dimension(); ++p) {
            // d_{p-1} d_{p-1}^T carries p+1 on the diagonal
            const IntMatrix d = incidence_dense(c, p - 1);
            const IntMatrix lower = d * d.transpose();
            for (Index i = 0; i < lower.rows(); ++i)
                CHECK(lower(i, i) == p + 1);
            // and L_p(x,x) - (p+1) counts the (p+1)-simplices containing x
            for (Index i = 0; i < c.count(p); ++i) {
                const Simplex& s = c.simplices(p)[i];
                long long cofaces = 0;
                for (const Simplex& t : c.simplices(p + 1))
                    if (std::includes(t.vertices.begin(), t.vertices.end(),
                                      s.vertices.begin(), s.vertices.end()))
                        ++cofaces;
                CHECK(l.blocks[p](i, i) - (p + 1) == cofaces);
            }
        }
    }
}

TEST_CASE("augmented pairs") {
    const SimplicialComplex triangle = build_complex(generate("complete", 3));
    const SimplicialComplex path3 = build_complex(parse_graph("3\n0 1\n1 2\n"));

    const AugmentedPair pair = augment(triangle, path3);
    REQUIRE(pair.size() == 7);

    // padded H misses the edge (0,2) and the triangle
    const Simplex missing_edge{{0, 2}};
    const Simplex missing_triangle{{0, 1, 2}};
    for (Index i = 0; i < pair.size(); ++i) {
        const bool absent = pair.union_simplices[i] == missing_edge ||
                            pair.union_simplices[i] == missing_triangle;
        CHECK(pair.in_h[i] == (absent ? 0 : 1));
        CHECK(pair.in_g[i] == 1);
        if (absent) {
            CHECK(pair.dirac_h.row(i).cwiseAbs().sum() == 0);
            CHECK(pair.dirac_h.col(i).cwiseAbs().sum() == 0);
        }
    }

    // spectra: G gives +-sqrt(3) with multiplicity three, H gives
    // {-sqrt3, -1, 0, 0, 0, 1, sqrt3}
    const double s3 = std::sqrt(3.0);
    CHECK(testing::multisets_close(
        testing::to_vector(eigenvalues_only(pair.dirac_g)),
        {-s3, -s3, -s3, 0, s3, s3, s3}, 1e-9));
    CHECK(testing::multisets_close(
        testing::to_vector(eigenvalues_only(pair.dirac_h)),
        {-s3, -1, 0, 0, 0, 1, s3}, 1e-9));

    // augmenting a complex against itself pads nowhere
    const AugmentedPair self = augment(triangle, triangle);
    CHECK(self.dirac_g == dirac_matrix(triangle).matrix);
    CHECK(self.dirac_g == self.dirac_h);
}

TEST_CASE("augmentation keeps the nonzero spectrum") {
    const SimplicialComplex k3 = build_complex(generate("complete", 3));
    const SimplicialComplex k3_minus = build_complex(parse_graph("3\n0 1\n1 2\n"));
    const AugmentedPair pair = augment(k3, k3_minus);
    CHECK(pair.size() == 7);

    auto nonzero = [](const Vector& v) {
        std::vector<double> out;
        for (Index i = 0; i < v.size(); ++i)
            if (std::abs(v(i)) > 1e-9)
                out.push_back(v(i));
        return out;
    };
    CHECK(testing::multisets_close(
        nonzero(eigenvalues_only(pair.dirac_h)),
        nonzero(eigenvalues_only(dirac_matrix(k3_minus).matrix)), 1e-9));

    // deleting the zero rows/columns recovers the unpadded matrix
    std::vector<Index> live;
    for (Index i = 0; i < pair.size(); ++i)
        if (pair.in_h[i])
            live.push_back(i);
    IntMatrix recovered(live.size(), live.size());
    for (std::size_t a = 0; a < live.size(); ++a)
        for (std::size_t b = 0; b < live.size(); ++b)
            recovered(a, b) = pair.dirac_h(live[a], live[b]);
    CHECK(recovered == dirac_matrix(k3_minus).matrix);
}

TEST_CASE("augmentation across different vertex counts") {
    // a wheel against its pyramid extension: 5 against 6 vertices
    std::vector<std::pair<int, int>> edges = generate("wheel", 4).edges();
    edges.emplace_back(0, 5);
    edges.emplace_back(1, 5);
    const SimplicialComplex w4 = build_complex(generate("wheel", 4));
    const SimplicialComplex pyramid =
        build_complex(Graph::from_edges(6, std::move(edges)));
    const AugmentedPair pair = augment(w4, pyramid);
    CHECK(pair.size() == 21);

    auto nonzero = [](const Vector& v) {
        std::vector<double> out;
        for (Index i = 0; i < v.size(); ++i)
            if (std::abs(v(i)) > 1e-9)
                out.push_back(v(i));
        return out;
    };
    CHECK(testing::multisets_close(
        nonzero(eigenvalues_only(pair.dirac_g)),
        nonzero(eigenvalues_only(dirac_matrix(w4).matrix)), 1e-9));
    CHECK(testing::multisets_close(
        nonzero(eigenvalues_only(pair.dirac_h)),
        nonzero(eigenvalues_only(dirac_matrix(pyramid).matrix)), 1e-9));
}

TEST_CASE("maximal simplex degree") {
    CHECK(maximal_simplex_degree(build_complex(generate("complete", 3))) == 3);
    CHECK(maximal_simplex_degree(build_complex(generate("path", 1))) == 0);
    CHECK(maximal_simplex_degree(build_complex(generate("wheel", 4))) == 4);
    // for K_n every simplex has n codimension-1 incidences, within the
    // 2^{n-1}-1 estimate
    for (int n : {3, 4, 5, 6}) {
        const int msd = maximal_simplex_degree(build_complex(generate("complete", n)));
        CHECK(msd == n);
        CHECK(msd <= (1 << (n - 1)) - 1);
    }
}

TEST_CASE("Poisson solves in the Coulomb gauge") {
    const SimplicialComplex triangle = build_complex(generate("complete", 3));

    const Cochain zero = zero_cochain(triangle, 1);
    CHECK(solve_poisson(triangle, 1, zero).norm() == 0.0);

    Cochain j = zero_cochain(triangle, 1);
    j.values << 1, -1, 0;
    const Cochain a = solve_poisson(triangle, 1, j);
    CHECK((a.values - j.values / 3.0).norm() < 1e-12);  // L_1 = 3 Id

    // constant current on the cycle overlaps the harmonic 1-form
    const SimplicialComplex c4 = build_complex(generate("cycle", 4));
    Cochain constant = zero_cochain(c4, 1);
    constant.values.setOnes();
    CHECK_THROWS_WITH_AS(solve_poisson(c4, 1, constant),
                         doctest::Contains("harmonic component of j has norm 1"),
                         input_error);

    // a solvable system on the octahedron: residual small
    const SimplicialComplex octa = build_complex(generate("octahedron"));
    Cochain rhs = zero_cochain(octa, 1);
    for (Index i = 0; i < rhs.size(); ++i)
        rhs.values(i) = std::sin(0.7 * static_cast<double>(i + 1));
    const Matrix l1 = laplacian(octa).blocks[1].cast<double>();
    // remove the harmonic part first so the solve is admissible
    Spectrum s = eigen_sym(l1);
    ComplexVector coeffs = s.eigenvectors.transpose().cast<Complex>() * rhs.values;
    for (Index i = 0; i < s.size(); ++i)
        if (std::abs(s.eigenvalues(i)) <= s.zero_tolerance)
            coeffs(i) = 0;
    rhs.values = s.eigenvectors.cast<Complex>() * coeffs;

    const Cochain solution = solve_poisson(octa, 1, rhs);
    CHECK((l1.cast<Complex>() * solution.values - rhs.values).norm() <=
          1e-8 * rhs.norm());
}

TEST_CASE("matrix exports") {
    const SimplicialComplex triangle = build_complex(generate("complete", 3));
    const DiracMatrix d = dirac_matrix(triangle);
    const std::string csv = matrix_csv(d.matrix);
    CHECK(csv.substr(0, 16) == "0,0,0,-1,-1,0,0\n");
    const std::string coords = matrix_coordinate_text(d.matrix);
    CHECK(coords.find("0 3 -1\n") != std::string::npos);
    CHECK(block_offsets_json(d.dim_offsets) == "{\"dim_offsets\":[0,3,6,7]}");
}
