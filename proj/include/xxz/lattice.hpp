#pragma once
// Concrete operators on the chain space: R-matrix, boundary K-matrices,
// double-row monodromy, transfer matrix, the Sklyanin determinant scalar and
// the analytic constraints pinning the transfer matrix as a polynomial.

#include "xxz/model.hpp"
#include "xxz/scalars.hpp"

namespace xxz {

// 4x4 trigonometric R-matrix
CMat r_matrix(const ModelInstance& inst, cd u);
// 2x2 boundary matrices
CMat k_minus_matrix(const ModelInstance& inst, cd u);
CMat k_plus_matrix(const ModelInstance& inst, cd u);

// Embed a 4x4 two-body operator on tensor factors p and r of an L-fold
// qubit space (factors indexed from 0, leftmost is slowest).
CMat embed_two_site(const CMat& m4, int p, int r, int L);

// Full double-row monodromy on aux (x) chain: dimension 2^(N+1).
// Ordering: R_{a1}(u/v1)...R_{aN}(u/vN) K^- R_{aN}(u vN)...R_{a1}(u v1),
// aux space is tensor factor 0, site i is factor i.
CMat double_row_monodromy(const ModelInstance& inst, cd u);

struct MonodromyBlocks {
    CMat A, B, C, D; // 2^N blocks; D includes the -A/b(qu^2) subtraction
};
MonodromyBlocks monodromy_blocks(const ModelInstance& inst, cd u);
MonodromyBlocks monodromy_blocks(const ModelInstance& inst, cd u, const CMat& mono);

// t(u) = tr_aux(K+ K); dimension 2^N
CMat transfer_matrix(const ModelInstance& inst, cd u);
// same object assembled from the blocks
CMat transfer_from_blocks(const ModelInstance& inst, cd u);

// closed-form scalar values of t at the special points
cd transfer_at_one(const ModelInstance& inst);
cd transfer_at_i(const ModelInstance& inst);
// leading coefficient of t as a polynomial in the crossing variable
cd transfer_leading_coeff(const ModelInstance& inst);

// scalar Sklyanin determinant combination: t(v_i/q) t(v_i) equals this times
// the identity
cd sklyanin_scalar(const ModelInstance& inst, int i);
double sklyanin_residual(const ModelInstance& inst, int i);

// defining cubic/quadratic identities of the R- and K-matrices
double ybe_residual(const ModelInstance& inst, cd u, cd v, cd w);
double reflection_residual(const ModelInstance& inst, cd u, cd v);
double dual_reflection_residual(const ModelInstance& inst, cd u, cd v);

} // namespace xxz
