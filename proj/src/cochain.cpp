#include "dirac/cochain.hpp"

#include "dirac/errors.hpp"

namespace dirac {

Cochain zero_cochain(const SimplicialComplex& c, int degree) {
    Index n = degree < 0 ? c.total() : c.count(degree);
    return {ComplexVector::Zero(n), degree};
}

Cochain make_cochain(const Vector& values, int degree) {
    return {values.cast<Complex>(), degree};
}

Cochain make_cochain(const ComplexVector& values, int degree) {
    return {values, degree};
}

void check_cochain(const SimplicialComplex& c, const Cochain& f) {
    Index expected = f.degree < 0 ? c.total() : c.count(f.degree);
    if (f.values.size() != expected)
        throw input_error("cochain length " + std::to_string(f.values.size()) +
                          " does not match the complex (expected " +
                          std::to_string(expected) + ")");
}

Cochain restrict_to_degree(const SimplicialComplex& c, const Cochain& f, int p) {
    check_cochain(c, f);
    if (f.degree >= 0) {
        if (f.degree != p)
            throw input_error("cochain degree mismatch");
        return f;
    }
    if (p < 0 || p > c.top_dimension())
        throw input_error("form degree out of range");
    return {f.values.segment(c.offset(p), c.count(p)), p};
}

Cochain embed_degree(const SimplicialComplex& c, const Cochain& f) {
    check_cochain(c, f);
    if (f.degree < 0)
        return f;
    Cochain full = zero_cochain(c);
    full.values.segment(c.offset(f.degree), c.count(f.degree)) = f.values;
    return full;
}

}  // namespace dirac
