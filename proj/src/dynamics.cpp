#include "dirac/dynamics.hpp"

#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include "dirac/errors.hpp"
#include "dirac/operators.hpp"
#include "dirac/spectral.hpp"

namespace dirac {

Cochain heat_evolve(const SimplicialComplex& c, const Cochain& f0, Complex t) {
    check_cochain(c, f0);
    const LaplacianBlocks l = laplacian(c);
    Cochain result = f0;
    for (int p = 0; p <= c.top_dimension(); ++p) {
        if (f0.degree >= 0 && f0.degree != p)
            continue;
        const Index at = f0.degree >= 0 ? 0 : c.offset(p);
        const Index n = c.count(p);
        if (n == 0)
            continue;
        Spectrum s = eigen_sym(l.blocks[p].cast<double>());
        ComplexVector coeffs =
            s.eigenvectors.transpose().cast<Complex>() * f0.values.segment(at, n);
        for (Index i = 0; i < n; ++i)
            coeffs(i) *= std::exp(-t * s.eigenvalues(i));
        result.values.segment(at, n) = s.eigenvectors.cast<Complex>() * coeffs;
    }
    return result;
}

namespace {

struct DiracEigen {
    Spectrum s;
    ComplexMatrix q;  // eigenvectors, complex view
};

DiracEigen dirac_eigen(const SimplicialComplex& c) {
    Spectrum s = dirac_spectrum(c);
    ComplexMatrix q = s.eigenvectors.cast<Complex>();
    return {std::move(s), std::move(q)};
}

double wave_energy(const ComplexVector& velocity_coeffs,
                   const ComplexVector& position_coeffs, const Vector& lambda) {
    double energy = 0.0;
    for (Index i = 0; i < lambda.size(); ++i)
        energy += std::norm(velocity_coeffs(i)) +
                  std::norm(lambda(i) * position_coeffs(i));
    return energy;
}

}  // namespace

std::pair<Cochain, Cochain> wave_evolve(const SimplicialComplex& c,
                                        const Cochain& u0, const Cochain& v0,
                                        double t) {
    check_cochain(c, u0);
    check_cochain(c, v0);
    if (u0.degree != v0.degree)
        throw input_error("wave initial conditions live on different gradings");
    const DiracEigen de = dirac_eigen(c);
    if (u0.degree >= 0)
        throw input_error("wave evolution runs on full cochains");

    ComplexVector a = de.q.adjoint() * u0.values;
    ComplexVector b = de.q.adjoint() * v0.values;

    double kernel_norm_sq = 0.0;
    for (Index i = 0; i < de.s.size(); ++i)
        if (std::abs(de.s.eigenvalues(i)) <= de.s.zero_tolerance)
            kernel_norm_sq += std::norm(b(i));
    if (std::sqrt(kernel_norm_sq) > 1e-8 * std::max(1.0, v0.norm()))
        throw input_error("wave velocity has a harmonic component above tolerance");

    const double energy0 = wave_energy(b, a, de.s.eigenvalues);
    ComplexVector pos(de.s.size()), vel(de.s.size());
    for (Index i = 0; i < de.s.size(); ++i) {
        const double lambda = de.s.eigenvalues(i);
        if (std::abs(lambda) <= de.s.zero_tolerance) {
            pos(i) = a(i);
            vel(i) = b(i);
        } else {
            pos(i) = std::cos(lambda * t) * a(i) +
                     std::sin(lambda * t) / lambda * b(i);
            vel(i) = -lambda * std::sin(lambda * t) * a(i) +
                     std::cos(lambda * t) * b(i);
        }
    }
    const double energy_t = wave_energy(vel, pos, de.s.eigenvalues);
    if (std::abs(energy_t - energy0) > 1e-8 * std::max(1.0, energy0))
        throw identity_error("wave energy not conserved");

    return {make_cochain(ComplexVector(de.q * pos)),
            make_cochain(ComplexVector(de.q * vel))};
}

Cochain schrodinger_evolve(const SimplicialComplex& c, const Cochain& psi0,
                           double t) {
    check_cochain(c, psi0);
    if (psi0.degree >= 0)
        throw input_error("Schrodinger evolution runs on full cochains");
    const DiracEigen de = dirac_eigen(c);
    ComplexVector coeffs = de.q.adjoint() * psi0.values;
    for (Index i = 0; i < de.s.size(); ++i)
        coeffs(i) *= std::exp(Complex(0, de.s.eigenvalues(i) * t));
    Cochain result = make_cochain(ComplexVector(de.q * coeffs));
    if (std::abs(result.norm() - psi0.norm()) > 1e-9 * std::max(1.0, psi0.norm()))
        throw identity_error("Schrodinger evolution lost unitarity");
    return result;
}

std::pair<Cochain, Cochain> discrete_map(const SimplicialComplex& c,
                                         const Cochain& f, const Cochain& g,
                                         int steps, double scale) {
    check_cochain(c, f);
    check_cochain(c, g);
    if (steps < 0 || scale <= 0.0)
        throw input_error("discrete map needs steps >= 0 and scale > 0");
    const ComplexMatrix d_scaled =
        (dirac_matrix(c).matrix.cast<double>() * scale).cast<Complex>();
    ComplexVector current_f = f.values, current_g = g.values;
    for (int k = 0; k < steps; ++k) {
        ComplexVector next_f = current_g - d_scaled * current_f;
        current_g = std::move(current_f);
        current_f = std::move(next_f);
    }
    return {make_cochain(current_f), make_cochain(current_g)};
}

double default_map_scale(const SimplicialComplex& c) {
    Vector lambda = eigenvalues_only(dirac_matrix(c).matrix);
    double lambda_max = lambda.size() > 0 ? lambda.cwiseAbs().maxCoeff() : 0.0;
    if (lambda_max <= 1e-12)
        return 1.0;
    return 0.9 * 2.0 / lambda_max;
}

double discrete_map_supertrace(const SimplicialComplex& c, double scale) {
    // str(T^2) = str(1 + scale^2 L) + str(1); the block traces are integers.
    long long chi = euler_characteristic(c);
    long long str_l = 0;
    const LaplacianBlocks l = laplacian(c);
    for (int p = 0; p < l.block_count(); ++p)
        str_l += (p % 2 == 0 ? 1 : -1) * static_cast<long long>(l.blocks[p].trace());
    return 2.0 * static_cast<double>(chi) +
           scale * scale * static_cast<double>(str_l);
}

Cochain project_off_kernel(const SimplicialComplex& c, const Cochain& f0) {
    check_cochain(c, f0);
    if (f0.degree >= 0)
        throw input_error("kernel projection runs on full cochains");
    const DiracEigen de = dirac_eigen(c);
    ComplexVector coeffs = de.q.adjoint() * f0.values;
    for (Index i = 0; i < de.s.size(); ++i)
        if (std::abs(de.s.eigenvalues(i)) <= de.s.zero_tolerance)
            coeffs(i) = 0.0;
    return make_cochain(ComplexVector(de.q * coeffs));
}

Cochain random_cochain(const SimplicialComplex& c, std::uint64_t seed, int degree) {
    std::mt19937_64 rng(seed);
    auto unit = [&rng]() {
        // raw engine output keeps the stream portable
        return 2.0 * (static_cast<double>(rng() >> 11) * 0x1.0p-53) - 1.0;
    };
    Cochain f = zero_cochain(c, degree);
    for (Index i = 0; i < f.size(); ++i) {
        double re = unit(), im = unit();
        f.values(i) = Complex(re, im);
    }
    return f;
}

namespace {

Complex heat_supertrace_sample(const SimplicialComplex& c, Complex t) {
    return supertrace(c, [](double x, Complex tt) { return -tt * x * x; }, t,
                      "heat")
        .value;
}

Complex cos_supertrace_sample(const SimplicialComplex& c, double t) {
    return supertrace(c, [](double x, Complex tt) { return Complex(0, 1) * tt * x; },
                      Complex(t, 0), "schrodinger")
        .value;
}

}  // namespace

EvolutionTrace heat_trace(const SimplicialComplex& c, const Cochain& f0,
                          Complex t_end, int steps) {
    EvolutionTrace trace;
    for (int k = 0; k <= steps; ++k) {
        // complex end times are sampled along the ray from 0 to t_end
        Complex t = steps == 0 ? Complex(0, 0)
                               : t_end * (static_cast<double>(k) / steps);
        Cochain state = heat_evolve(c, f0, t);
        trace.times.push_back(std::abs(t));
        trace.norms.push_back(state.norm());
        trace.supertrace_samples.push_back(heat_supertrace_sample(c, t));
        trace.states.push_back(std::move(state));
    }
    return trace;
}

EvolutionTrace schrodinger_trace(const SimplicialComplex& c, const Cochain& psi0,
                                 double t_end, int steps) {
    EvolutionTrace trace;
    for (int k = 0; k <= steps; ++k) {
        double t = steps == 0 ? 0.0 : t_end * k / steps;
        Cochain state = schrodinger_evolve(c, psi0, t);
        trace.times.push_back(t);
        trace.norms.push_back(state.norm());
        trace.supertrace_samples.push_back(cos_supertrace_sample(c, t));
        trace.states.push_back(std::move(state));
    }
    return trace;
}

EvolutionTrace wave_trace(const SimplicialComplex& c, const Cochain& u0,
                          const Cochain& v0, double t_end, int steps) {
    EvolutionTrace trace;
    for (int k = 0; k <= steps; ++k) {
        double t = steps == 0 ? 0.0 : t_end * k / steps;
        auto [position, velocity] = wave_evolve(c, u0, v0, t);
        trace.times.push_back(t);
        trace.norms.push_back(position.norm());
        trace.supertrace_samples.push_back(cos_supertrace_sample(c, t));
        trace.states.push_back(std::move(position));
    }
    return trace;
}

EvolutionTrace map_trace(const SimplicialComplex& c, const Cochain& f0,
                         const Cochain& g0, int steps, double scale) {
    EvolutionTrace trace;
    Cochain f = f0, g = g0;
    const Complex str2(discrete_map_supertrace(c, scale), 0.0);
    for (int k = 0; k <= steps; ++k) {
        trace.times.push_back(k);
        trace.norms.push_back(f.norm());
        trace.supertrace_samples.push_back(str2);
        trace.states.push_back(f);
        auto [next_f, next_g] = discrete_map(c, f, g, 1, scale);
        f = std::move(next_f);
        g = std::move(next_g);
    }
    return trace;
}

std::string evolution_csv(const EvolutionTrace& trace) {
    std::ostringstream out;
    out << "time";
    if (!trace.states.empty())
        for (Index i = 0; i < trace.states.front().size(); ++i)
            out << ",re_" << i << ",im_" << i;
    out << ",norm,supertrace_re,supertrace_im\n";
    char buffer[64];
    auto emit = [&](double x) {
        std::snprintf(buffer, sizeof(buffer), "%.12g", x);
        out << buffer;
    };
    for (std::size_t k = 0; k < trace.times.size(); ++k) {
        emit(trace.times[k]);
        for (Index i = 0; i < trace.states[k].size(); ++i) {
            out << ',';
            emit(trace.states[k].values(i).real());
            out << ',';
            emit(trace.states[k].values(i).imag());
        }
        out << ',';
        emit(trace.norms[k]);
        out << ',';
        emit(trace.supertrace_samples[k].real());
        out << ',';
        emit(trace.supertrace_samples[k].imag());
        out << '\n';
    }
    return out.str();
}

}  // namespace dirac
