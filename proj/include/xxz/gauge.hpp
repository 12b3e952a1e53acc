#pragma once
// Gauge (co/contravariant) 2-vectors, the dynamical operator family obtained
// by sandwiching the double-row monodromy between them, and the gauged
// decomposition of the transfer matrix.

#include "xxz/lattice.hpp"

#include <array>

namespace xxz {

// local gauge vectors (2 components)
std::array<cd, 2> gv_X(const GaugeFrame& f, cd q, cd u, int m);
std::array<cd, 2> gv_Y(const GaugeFrame& f, cd q, cd u, int m);
std::array<cd, 2> gv_Xt(const GaugeFrame& f, cd q, cd u, int m); // covector, carries qu/gamma_{m-1}
std::array<cd, 2> gv_Yt(const GaugeFrame& f, cd q, cd u, int m); // covector, carries qu/gamma_{m+1}

// <l| M |r> contraction over the auxiliary space of the monodromy
CMat aux_sandwich(const std::array<cd, 2>& l, const CMat& mono, const std::array<cd, 2>& r, int d);

// dynamical operator family; the monodromy at u may be passed in to avoid
// rebuilding it (it does not depend on m or the frame)
CMat dyn_A(const ModelInstance& inst, const GaugeFrame& f, cd u, int m, const CMat* mono = nullptr);
CMat dyn_B(const ModelInstance& inst, const GaugeFrame& f, cd u, int m, const CMat* mono = nullptr);
CMat dyn_C(const ModelInstance& inst, const GaugeFrame& f, cd u, int m, const CMat* mono = nullptr);
CMat dyn_D(const ModelInstance& inst, const GaugeFrame& f, cd u, int m, const CMat* mono = nullptr);
// D-type operator without the A-subtraction, used to dress the right
// separated basis
CMat d_hat(const ModelInstance& inst, const GaugeFrame& f, cd u, int m, const CMat* mono = nullptr);

// scalar weights of the gauged decomposition
cd a_tilde(const ModelInstance& inst, cd u);
cd d_tilde(const ModelInstance& inst, cd u);
cd a_tilde_m(const ModelInstance& inst, const GaugeFrame& f, cd u, int m);
cd d_tilde_m(const ModelInstance& inst, const GaugeFrame& f, cd u, int m);

// diagonal part a~(u,m) A + d~(u,m) D of the gauged transfer matrix
CMat gauged_transfer_diag(const ModelInstance& inst, const GaugeFrame& f, cd u, int m,
                          const CMat* mono = nullptr);
// full reassembly: diag + u^-1 c(qu) (zeta_m B - zeta~_m C); equals t(u)
CMat gauged_transfer(const ModelInstance& inst, const GaugeFrame& f, cd u, int m,
                     const CMat* mono = nullptr);

struct CommutationResiduals {
    double bb, ab, db;
};
// residuals of the three exchange relations between the dynamical operators,
// evaluated in the given frame at (u, v, m)
CommutationResiduals check_commutation(const ModelInstance& inst, const GaugeFrame& f, cd u, cd v, int m);

// residuals of the two frame-change linear relations at (u, p, m)
std::pair<double, double> check_linear_relations(const ModelInstance& inst, const GaugeFrame& dr,
                                                 const GaugeFrame& dl, cd u, int p, int m);

} // namespace xxz
