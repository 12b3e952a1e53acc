#pragma once
// Separated (left/right) bases built on the inhomogeneity lattice, their
// pseudo-eigen properties under the creation operator, scalar products and
// the diagonal measure, the separated quadratic system for the spectrum, and
// reconstruction of transfer-matrix eigenstates from separated data.

#include "xxz/bethe.hpp"

namespace xxz {

// covector times matrix
std::vector<cd> row_apply(const std::vector<cd>& row, const CMat& m);

// left vacuum covector: tensor product of dual gauge vectors at the
// inhomogeneities, frame dl(N)
std::vector<cd> left_vacuum(const ModelInstance& inst, const GaugeFrame& dl, int m);
// right vacuum vector
std::vector<cd> right_vacuum(const ModelInstance& inst, const GaugeFrame& dl, int m);

// dressed basis elements labelled by a bit string hbar
std::vector<cd> left_sov_state(const ModelInstance& inst, const GaugeFrame& dl,
                               const std::vector<int>& hbar, int m);
std::vector<cd> right_sov_state(const ModelInstance& inst, const GaugeFrame& dl,
                                const std::vector<int>& hbar, int m);

// pseudo-eigen residual of the creation operator on the left vacuum
double check_left_vacuum_pseudo(const ModelInstance& inst, const GaugeFrame& dl, cd u, int m);
// and on a dressed left state
double check_left_sov_pseudo(const ModelInstance& inst, const GaugeFrame& dl,
                             const std::vector<int>& hbar, cd u, int m);
// creation action on the right vacuum and on a dressed right state
double check_right_vacuum_pseudo(const ModelInstance& inst, const GaugeFrame& dl, cd u, int m);
double check_right_sov_creation(const ModelInstance& inst, const GaugeFrame& dl,
                                const std::vector<int>& hbar, cd u, int m);

// |det| of the row-normalized matrix whose rows are the 2^N left states;
// bounded away from zero iff the family is a basis
double left_family_det(const ModelInstance& inst, const GaugeFrame& dl, int m);

// overlap of the left vacuum with the highest-weight vector vs closed form
double vacuum_overlap_residual(const ModelInstance& inst, const GaugeFrame& dr, const GaugeFrame& dl,
                               int m);
// overlap of a dressed left state with the highest-weight vector
double dressed_overlap_residual(const ModelInstance& inst, const GaugeFrame& dr, const GaugeFrame& dl,
                                const std::vector<int>& hbar, int m);

// projections of (M+1)- and M-string states on a dressed left state at the
// separation shift m0 + 2(N-1)
double proj_residual_long(const ModelInstance& inst, const std::vector<int>& hbar, cd u,
                          const std::vector<cd>& us, int m0);
double proj_residual_short(const ModelInstance& inst, const std::vector<int>& hbar, cd u,
                           const std::vector<cd>& us, int m0);

// consistency between the string-lowering constant, the left pseudo-eigen
// constant and the inhomogeneous coupling
double chi_identity_residual(const ModelInstance& inst, int m0);

// Gram matrix leftSov(h, m) . rightSov(h', m+2) over all bit strings, in
// lexicographic bit-string order
CMat sov_gram(const ModelInstance& inst, const GaugeFrame& dl, int m);
// off-diagonal mass of the Gram matrix relative to its diagonal
double biorthogonality_residual(const ModelInstance& inst, const GaugeFrame& dl, int m);
// max relative deviation of the closed-form measure from the Gram diagonal
double mu_residual(const ModelInstance& inst, const GaugeFrame& dl, int m);

struct SovSolution {
    std::vector<cd> lam_at_v;  // eigenvalue values at the inhomogeneities
    double sys_res = 0;        // residual of the separated quadratic system
};
// solve the separated quadratic system by homotopy from the decoupled
// system; returns one solution per sign choice (2^N)
std::vector<SovSolution> sov_spectrum(const ModelInstance& inst);

// separated-variable eigenstate built from an eigenvalue branch given by its
// Bethe roots
std::vector<cd> sov_eigenstate(const ModelInstance& inst, const std::vector<cd>& roots, int m0);

struct SovStateCheck {
    double eig_res;   // |t(u) Phi - Lam(u) Phi| / |t(u) Phi|
    double prop_res;  // distance of the Bethe vector from the line spanned by Phi
};
SovStateCheck check_sov_state(const ModelInstance& inst, const std::vector<cd>& roots, int m0);

// all bit strings of length n, lexicographic
std::vector<std::vector<int>> bit_strings(int n);

} // namespace xxz
