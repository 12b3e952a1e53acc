#pragma once
// Model data: deformation parameter, inhomogeneities, the two boundary
// parameter sets in both parametrizations, and the gauge frames.

#include "xxz/linalg.hpp"

#include <optional>
#include <vector>

namespace xxz {

struct LeftBoundary {
    // left reflection matrix data: (eps_p, eps_m) derived from (kappa, kappat, xi, xit)
    cd kappa, kappat, xi, xit;
    cd eps_p, eps_m;
};

struct RightBoundary {
    // right reflection matrix data: (nu_p, nu_m) derived from (tau, taut, mu, mut)
    cd tau, taut, mu, mut;
    cd nu_p, nu_m;
};

LeftBoundary left_boundary_from_xi(cd kappa, cd kappat, cd xi, cd xit);
RightBoundary right_boundary_from_mu(cd tau, cd taut, cd mu, cd mut);

struct ModelInstance {
    cd q;
    int N = 0;
    std::vector<cd> v; // inhomogeneities, site i at v[i-1]
    LeftBoundary lb;
    RightBoundary rb;

    // crossing/parity invariant variable (q u^2 + q^-1 u^-2)/(q + q^-1)
    cd U(cd u) const { return (q * u * u + 1.0 / (q * u * u)) / (q + 1.0 / q); }
};

// Genericity requirements: q away from roots of unity, inhomogeneities
// non-resonant, boundary parameters nonzero with moderate modulus.
// Returns a description of the first violated inequality, or nullopt.
std::optional<std::string> genericity_violation(const ModelInstance& inst);

// Deterministic draw (std::mt19937_64) with rejection until generic.
// Throws after 1000 rejected draws.
ModelInstance sample_generic(unsigned long long seed, int N);

struct GaugeFrame {
    cd alpha, beta;
    int m0 = 0;
    int M = 0;
    enum class Tag { dr, dl, generic } tag = Tag::generic;

    cd gamma(cd q, cd u, int m) const { return alpha * std::pow(q, -m) * u - beta * std::pow(q, m) / u; }
    cd gamma(cd q, int m) const { return gamma(q, cd(1.0), m); }
};

// Frame diagonalizing the dressed right reflection matrix (vacuum frame).
GaugeFrame gauge_dr(const ModelInstance& inst, int m0);
// Frame making the transfer matrix modified-diagonal for strings of length M.
GaugeFrame gauge_dl(const ModelInstance& inst, int m0, int M);

// Asserts |gamma_m| > 1e-8 over m in [m0-2N-2, m0+2N+2]; throws otherwise.
void check_frame(const GaugeFrame& f, const ModelInstance& inst);

} // namespace xxz
