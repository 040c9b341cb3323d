#ifndef DIRAC_DYNAMICS_HPP
#define DIRAC_DYNAMICS_HPP

#include <utility>
#include <vector>

#include "dirac/cochain.hpp"
#include "dirac/complex.hpp"
#include "dirac/types.hpp"

namespace dirac {

// e^{-tL} f0 for complex t, block by block through the Laplacian
// eigendecomposition. t = 0 returns f0; real t -> infinity converges to the
// harmonic projection.
Cochain heat_evolve(const SimplicialComplex& c, const Cochain& f0, Complex t);

/**
 * Wave evolution cos(Dt) u0 + sin(Dt) D^+ v0 together with its time
 * derivative. D^+ is the pseudo-inverse (zero on the kernel); v0 must be
 * orthogonal to ker(D) within 1e-8, and the energy |v|^2 + |Du|^2 is checked
 * to be conserved to 1e-8 relative.
 */
std::pair<Cochain, Cochain> wave_evolve(const SimplicialComplex& c,
                                        const Cochain& u0, const Cochain& v0,
                                        double t);

// e^{iDt} psi0; unitarity is checked to 1e-9 relative.
Cochain schrodinger_evolve(const SimplicialComplex& c, const Cochain& psi0,
                           double t);

/**
 * The discrete-time map T(f, g) = (g - D_s f, f) with D_s = scale * D,
 * iterated the given number of steps. The map is stable when the scaled
 * spectral radius stays below 2.
 */
std::pair<Cochain, Cochain> discrete_map(const SimplicialComplex& c,
                                         const Cochain& f, const Cochain& g,
                                         int steps, double scale);

// Stable default: 0.9 * 2 / lambda_max(D) (1.0 when D = 0).
double default_map_scale(const SimplicialComplex& c);

// str(T^2) over the doubled space, evaluated from exact integer block traces:
// str(1 + scale^2 L) + str(1). Equals 2 chi(G) because str(L) = 0.
double discrete_map_supertrace(const SimplicialComplex& c, double scale);

// Projection of f0 onto the orthocomplement of ker(D); used to build
// admissible wave velocities.
Cochain project_off_kernel(const SimplicialComplex& c, const Cochain& f0);

// Deterministic pseudo-random cochain with entries in [-1, 1] + i[-1, 1].
Cochain random_cochain(const SimplicialComplex& c, std::uint64_t seed,
                       int degree = -1);

/** Sampled evolution, as emitted by the CLI as CSV. */
struct EvolutionTrace {
    std::vector<double> times;
    std::vector<Cochain> states;
    std::vector<double> norms;
    std::vector<Complex> supertrace_samples;
};

EvolutionTrace heat_trace(const SimplicialComplex& c, const Cochain& f0,
                          Complex t_end, int steps);
EvolutionTrace schrodinger_trace(const SimplicialComplex& c, const Cochain& psi0,
                                 double t_end, int steps);
EvolutionTrace wave_trace(const SimplicialComplex& c, const Cochain& u0,
                          const Cochain& v0, double t_end, int steps);
EvolutionTrace map_trace(const SimplicialComplex& c, const Cochain& f0,
                         const Cochain& g0, int steps, double scale);

std::string evolution_csv(const EvolutionTrace& trace);

}  // namespace dirac

#endif
