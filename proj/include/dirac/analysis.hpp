#ifndef DIRAC_ANALYSIS_HPP
#define DIRAC_ANALYSIS_HPP

#include <json.hpp>
#include <string>

#include "dirac/graph.hpp"
#include "dirac/spectral.hpp"

namespace dirac {

struct AnalysisOptions {
    int max_dim = -1;
    double tolerance = 1e-8;
};

/**
 * Full report for one graph: f-vector, Euler characteristic, Betti numbers,
 * Dirac spectrum, complexity, sign-less Euler-Poincare number, supertrace
 * deviations and the curvature total. Every internal identity (chi
 * consistency, Gauss-Bonnet, handshake, multiplicity pairing, supertrace
 * deviations within tolerance) is enforced; a violation raises
 * identity_error.
 */
nlohmann::json analyze_graph(const Graph& g, const AnalysisOptions& options = {});

// Round through 12 significant digits so reports are byte-stable.
double round_significant(double x);

nlohmann::json spectrum_json(const Spectrum& s);
std::string spectrum_csv(const Spectrum& s);

// Complex scalars in "a+bi" form.
Complex parse_complex(const std::string& text);
std::string format_complex(Complex z);

}  // namespace dirac

#endif
