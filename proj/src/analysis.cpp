#include "dirac/analysis.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "dirac/errors.hpp"
#include "dirac/geometry.hpp"
#include "dirac/hodge.hpp"

namespace dirac {

double round_significant(double x) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.12g", x);
    return std::strtod(buffer, nullptr);
}

namespace {

nlohmann::json vector_json(const Vector& v) {
    nlohmann::json out = nlohmann::json::array();
    for (Index i = 0; i < v.size(); ++i)
        out.push_back(round_significant(v(i)));
    return out;
}

// The verification sweep reported (and enforced) by analyze: the quartic
// family is sampled at a small t so the terms stay representable in doubles.
struct SweepEntry {
    const char* function;
    Complex t;
};

constexpr int kSweepSize = 5;
const SweepEntry kSweep[kSweepSize] = {
    {"heat", {1, 0}},       {"heat", {1, 2}},    {"schrodinger", {1, 0}},
    {"sine", {0.5, 0}},     {"quartic", {0.05, 0}},
};

const SuperTraceFunction& named_function(const std::string& name) {
    for (const auto& f : mckean_singer_functions())
        if (f.name == name)
            return f;
    throw input_error("unknown supertrace function '" + name + "'");
}

}  // namespace

nlohmann::json analyze_graph(const Graph& g, const AnalysisOptions& options) {
    const SimplicialComplex c = build_complex(g, options.max_dim);
    const long long chi = euler_characteristic(c);
    const double tol = options.tolerance * std::max<double>(1.0, c.total());

    nlohmann::json report;
    report["f_vector"] = c.f_vector();
    report["euler_characteristic"] = chi;

    const BettiVector b = betti(c);
    report["betti"] = b;

    const Spectrum spectrum = dirac_spectrum(c);
    report["dirac_spectrum"] = vector_json(spectrum.eigenvalues);

    const Complexity complexity = dirac_complexity(c);
    report["complexity"] = {
        {"sign", complexity.sign},
        {"log_magnitude", round_significant(complexity.log_magnitude)},
        {"zero_count", complexity.zero_count},
    };
    report["signless_euler_poincare"] = signless_euler_poincare(c);

    nlohmann::json deviations = nlohmann::json::array();
    for (const auto& entry : kSweep) {
        const SuperTraceReport r =
            supertrace(c, named_function(entry.function).f, entry.t, entry.function);
        if (r.deviation > tol)
            throw identity_error("supertrace deviation " +
                                 std::to_string(r.deviation) + " for " +
                                 std::string(entry.function) + " at t = " +
                                 format_complex(entry.t));
        deviations.push_back({{"function", entry.function},
                              {"t", format_complex(entry.t)},
                              {"deviation", round_significant(r.deviation)}});
    }
    report["mckean_singer_deviations"] = deviations;

    if (!multiplicity_pairing_ok(multiplicity_pairing(c), chi))
        throw identity_error("eigenvalue multiplicities do not pair across degrees");
    if (!handshake_check(c).ok)
        throw identity_error("handshake trace identity failed");

    // Curvature is a property of the graph, not of a dimension-capped complex.
    if (options.max_dim < 0) {
        const CurvatureReport k = curvature(g);
        std::ostringstream total;
        total << k.total;
        report["curvature_total"] = total.str();
        if (k.total != Rational(chi))
            throw identity_error("curvature total does not equal the Euler characteristic");
    }
    return report;
}

nlohmann::json spectrum_json(const Spectrum& s) {
    nlohmann::json out;
    out["eigenvalues"] = vector_json(s.eigenvalues);
    out["grading"] = s.grading;
    out["zero_tolerance"] = round_significant(s.zero_tolerance);
    return out;
}

std::string spectrum_csv(const Spectrum& s) {
    std::ostringstream out;
    out << "index,eigenvalue,grading\n";
    char buffer[64];
    for (Index i = 0; i < s.size(); ++i) {
        std::snprintf(buffer, sizeof(buffer), "%.12g", s.eigenvalues(i));
        out << i << ',' << buffer << ',';
        if (i < static_cast<Index>(s.grading.size()))
            out << s.grading[i];
        out << '\n';
    }
    return out.str();
}

Complex parse_complex(const std::string& text) {
    std::string t;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            t.push_back(ch);
    if (t.empty())
        throw input_error("empty complex literal");

    auto parse_real = [](const std::string& s) {
        if (s.empty() || s == "+")
            return 1.0;
        if (s == "-")
            return -1.0;
        char* end = nullptr;
        double value = std::strtod(s.c_str(), &end);
        if (end != s.c_str() + s.size())
            throw input_error("malformed number '" + s + "'");
        return value;
    };

    if (t.back() != 'i' && t.back() != 'I')
        return Complex(parse_real(t), 0.0);

    t.pop_back();
    // split before the sign of the imaginary part (not an exponent sign)
    std::size_t split = std::string::npos;
    for (std::size_t k = t.size(); k-- > 1;) {
        if ((t[k] == '+' || t[k] == '-') && t[k - 1] != 'e' && t[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    if (split == std::string::npos)
        return Complex(0.0, parse_real(t));
    return Complex(parse_real(t.substr(0, split)), parse_real(t.substr(split)));
}

std::string format_complex(Complex z) {
    char buffer[128];
    if (z.imag() == 0.0) {
        std::snprintf(buffer, sizeof(buffer), "%.12g", z.real());
        return buffer;
    }
    std::snprintf(buffer, sizeof(buffer), "%.12g%+.12gi", z.real(), z.imag());
    return buffer;
}

}  // namespace dirac
