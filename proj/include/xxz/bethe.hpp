#pragma once
// Highest-weight vector, creation strings, off-shell Bethe vectors, the
// eigenvalue/Bethe-equation scalar functions, residual checks of the
// off-shell action identities, and the Bethe-root solver.

#include "xxz/gauge.hpp"

namespace xxz {

// tensor product of gauged local vectors in the vacuum frame
std::vector<cd> highest_weight_vector(const ModelInstance& inst, const GaugeFrame& dr);

// ordered product B(u_1, m + 2(M-1)) ... B(u_M, m) in the given frame
CMat creation_string(const ModelInstance& inst, const GaugeFrame& f, const std::vector<cd>& us, int m);

// creation string applied to the highest-weight vector; |us| = M <= N
std::vector<cd> bethe_vector(const ModelInstance& inst, const GaugeFrame& dr, const GaugeFrame& dl,
                             const std::vector<cd>& us, int m0);

struct EigenTerms {
    cd lam_d, lam_g, lam; // full eigenvalue function and its two pieces
};
EigenTerms eigenvalue_terms(const ModelInstance& inst, cd u, const std::vector<cd>& us);

// dressed-diagonal eigenvalue piece and its unwanted-term weight
cd lam_d_fn(const ModelInstance& inst, cd u, const std::vector<cd>& us);
cd e_d_fn(const ModelInstance& inst, cd ui, const std::vector<cd>& usi);
// inhomogeneous piece and its weight
cd lam_g_fn(const ModelInstance& inst, cd u, const std::vector<cd>& us);
cd e_g_fn(const ModelInstance& inst, cd ui, const std::vector<cd>& usi);
cd lam_full_fn(const ModelInstance& inst, cd u, const std::vector<cd>& us);

// off-shell action of the gauged-diagonal transfer matrix on a length-M
// string state, including the (M+1)-string inhomogeneous term
double check_offshell_transfer(const ModelInstance& inst, cd u, const std::vector<cd>& us, int m0);
// the (N+1)-string reduction identity (strings of full chain length)
double check_offshell_string(const ModelInstance& inst, cd u, const std::vector<cd>& us, int m0);
// off-shell action of the plain transfer matrix on the full Bethe vector
double check_full_offshell(const ModelInstance& inst, cd u, const std::vector<cd>& us, int m0);

// normalized Bethe-equation residuals, one per root
std::vector<cd> bethe_residuals(const ModelInstance& inst, const std::vector<cd>& us);

// Newton refinement with finite-difference Jacobian
std::vector<cd> newton_refine(const ModelInstance& inst, std::vector<cd> us, int max_iter = 40);

struct SpectralBranch {
    UPoly lam;              // eigenvalue as polynomial in the crossing variable
    std::vector<cd> roots;  // refined Bethe roots
    UPoly Q;                // Q-polynomial in the crossing variable
    double bethe_res = 0;   // max |Bethe residual| after refinement
    bool refined = false;
    std::vector<cd> eigvec; // oracle eigenvector the branch was seeded from
};

// Eigen-decompose t(u0), interpolate each eigenvalue branch in the crossing
// variable, solve the inhomogeneous functional relation for Q, extract and
// refine the roots, deduplicate.
std::vector<SpectralBranch> solve_bethe(const ModelInstance& inst, int m0);

// max residual of the inhomogeneous functional relation over probe points,
// with Q built from the branch roots
double tq_residual(const ModelInstance& inst, const std::vector<cd>& roots, int n_probe = 20);
// same relation with the eigenvalue and Q-function given as polynomials in
// the crossing variable (the fitted branch data)
double tq_residual(const ModelInstance& inst, const UPoly& lam, const UPoly& Q, int n_probe = 20);

// fixed leading coefficient of Q: [(q+q^-1)/(q-q^-1)^2]^N
cd q_leading_coeff(const ModelInstance& inst);

} // namespace xxz
