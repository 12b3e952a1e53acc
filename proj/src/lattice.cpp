#include "xxz/lattice.hpp"

#include <cmath>

namespace xxz {

CMat r_matrix(const ModelInstance& inst, cd u) {
    if (std::abs(u) == 0.0) throw std::invalid_argument("r_matrix: u = 0");
    cd bq = b_fn(inst, inst.q * u), bu = b_fn(inst, u);
    CMat r(4, 4);
    r(0, 0) = bq;
    r(1, 1) = bu; r(1, 2) = 1.0;
    r(2, 1) = 1.0; r(2, 2) = bu;
    r(3, 3) = bq;
    return r;
}

CMat k_minus_matrix(const ModelInstance& inst, cd u) {
    if (std::abs(u) == 0.0) throw std::invalid_argument("k_minus_matrix: u = 0");
    const auto& rb = inst.rb;
    CMat k(2, 2);
    k(0, 0) = k_minus_fn(inst, u);
    k(0, 1) = rb.tau * rb.tau * c_fn(u);
    k(1, 0) = rb.taut * rb.taut * c_fn(u);
    k(1, 1) = k_minus_fn(inst, 1.0 / u);
    return k;
}

CMat k_plus_matrix(const ModelInstance& inst, cd u) {
    if (std::abs(u) == 0.0) throw std::invalid_argument("k_plus_matrix: u = 0");
    const auto& lb = inst.lb;
    cd q = inst.q;
    CMat k(2, 2);
    k(0, 0) = k_plus_fn(inst, q * u);
    k(0, 1) = lb.kappat * lb.kappat * c_fn(q * u);
    k(1, 0) = lb.kappa * lb.kappa * c_fn(q * u);
    k(1, 1) = k_plus_fn(inst, 1.0 / (q * u));
    return k;
}

CMat embed_two_site(const CMat& m4, int p, int r, int L) {
    int dim = 1 << L;
    CMat op(dim, dim);
    for (int iout = 0; iout < dim; ++iout) {
        int bp = (iout >> (L - 1 - p)) & 1;
        int br = (iout >> (L - 1 - r)) & 1;
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
                cd val = m4((bp << 1) | br, (a << 1) | b);
                if (val == cd(0)) continue;
                int iin = iout;
                iin = (iin & ~(1 << (L - 1 - p))) | (a << (L - 1 - p));
                iin = (iin & ~(1 << (L - 1 - r))) | (b << (L - 1 - r));
                op(iout, iin) += val;
            }
    }
    return op;
}

CMat double_row_monodromy(const ModelInstance& inst, cd u) {
    int N = inst.N, L = N + 1;
    CMat mono = kron(k_minus_matrix(inst, u), CMat::identity(1 << N));
    for (int i = N; i >= 1; --i)
        mono = mono * embed_two_site(r_matrix(inst, u * inst.v[i - 1]), 0, i, L);
    for (int i = N; i >= 1; --i)
        mono = embed_two_site(r_matrix(inst, u / inst.v[i - 1]), 0, i, L) * mono;
    return mono;
}

static CMat block_of(const CMat& mono, int d, int bi, int bj) {
    CMat blk(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) blk(i, j) = mono(bi * d + i, bj * d + j);
    return blk;
}

MonodromyBlocks monodromy_blocks(const ModelInstance& inst, cd u, const CMat& mono) {
    int d = 1 << inst.N;
    cd split = b_fn(inst, inst.q * u * u);
    if (std::abs(split) < 1e-10) throw std::runtime_error("monodromy_blocks: b(qu^2) near zero");
    MonodromyBlocks blk{block_of(mono, d, 0, 0), block_of(mono, d, 0, 1),
                        block_of(mono, d, 1, 0), block_of(mono, d, 1, 1)};
    blk.D = blk.D - blk.A * (1.0 / split);
    return blk;
}

MonodromyBlocks monodromy_blocks(const ModelInstance& inst, cd u) {
    return monodromy_blocks(inst, u, double_row_monodromy(inst, u));
}

CMat transfer_matrix(const ModelInstance& inst, cd u) {
    CMat mono = double_row_monodromy(inst, u);
    CMat kp = k_plus_matrix(inst, u);
    int d = 1 << inst.N;
    CMat t(d, d);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            cd w = kp(i, j);
            if (w == cd(0)) continue;
            for (int a = 0; a < d; ++a)
                for (int c = 0; c < d; ++c) t(a, c) += w * mono(j * d + a, i * d + c);
        }
    return t;
}

CMat transfer_from_blocks(const ModelInstance& inst, cd u) {
    auto blk = monodromy_blocks(inst, u);
    cd q = inst.q;
    return blk.A * (phi_fn(inst, u) * k_plus_fn(inst, u)) + blk.D * k_plus_fn(inst, 1.0 / (q * u)) +
           blk.B * (c_fn(q * u) * inst.lb.kappa * inst.lb.kappa) +
           blk.C * (c_fn(q * u) * inst.lb.kappat * inst.lb.kappat);
}

cd transfer_at_one(const ModelInstance& inst) {
    cd q = inst.q;
    cd r = (q + 1.0 / q) * (inst.rb.nu_p + inst.rb.nu_m) * (inst.lb.eps_p + inst.lb.eps_m);
    for (cd vi : inst.v) r *= b_fn(inst, q * vi) * b_fn(inst, q / vi);
    return r;
}

cd transfer_at_i(const ModelInstance& inst) {
    cd q = inst.q;
    const cd iu(0.0, 1.0);
    cd r = (q + 1.0 / q) * (inst.rb.nu_m - inst.rb.nu_p) * (inst.lb.eps_m - inst.lb.eps_p);
    for (cd vi : inst.v) r *= b_fn(inst, iu * q * vi) * b_fn(inst, iu * q / vi);
    return r;
}

cd transfer_leading_coeff(const ModelInstance& inst) {
    cd q = inst.q;
    const auto& lb = inst.lb;
    const auto& rb = inst.rb;
    return std::pow(q + 1.0 / q, inst.N + 2) / std::pow(q - 1.0 / q, 2 * inst.N) *
           (lb.kappat * lb.kappat * rb.taut * rb.taut + lb.kappa * lb.kappa * rb.tau * rb.tau);
}

static cd det_q(const ModelInstance& inst, cd u) {
    cd q = inst.q;
    return b_fn(inst, u * u) * b_fn(inst, std::pow(q, -4) / (u * u)) *
           kt_plus_fn(inst, q * u) * kt_minus_fn(inst, q * u) *
           kt_plus_fn(inst, 1.0 / (q * u)) * kt_minus_fn(inst, 1.0 / (q * u)) *
           lambda_fn(inst, q * u) * lambda_fn(inst, 1.0 / (q * u));
}

cd sklyanin_scalar(const ModelInstance& inst, int i) {
    cd vi = inst.v[i];
    cd q = inst.q;
    cd den = b_fn(inst, q * vi * vi) * b_fn(inst, q / (vi * vi));
    if (std::abs(den) < 1e-10) throw std::runtime_error("sklyanin_scalar: b(q v_i^2) near zero");
    return det_q(inst, vi / q) / den;
}

double sklyanin_residual(const ModelInstance& inst, int i) {
    cd vi = inst.v[i];
    CMat lhs = transfer_matrix(inst, vi / inst.q) * transfer_matrix(inst, vi);
    CMat rhs = CMat::identity(1 << inst.N) * sklyanin_scalar(inst, i);
    return rel_resid(lhs, rhs);
}

double ybe_residual(const ModelInstance& inst, cd u, cd v, cd w) {
    CMat r12 = embed_two_site(r_matrix(inst, u / v), 0, 1, 3);
    CMat r13 = embed_two_site(r_matrix(inst, u / w), 0, 2, 3);
    CMat r23 = embed_two_site(r_matrix(inst, v / w), 1, 2, 3);
    return rel_resid(r12 * r13 * r23, r23 * r13 * r12);
}

double reflection_residual(const ModelInstance& inst, cd u, cd v) {
    CMat k1 = kron(k_minus_matrix(inst, u), CMat::identity(2));
    CMat k2 = kron(CMat::identity(2), k_minus_matrix(inst, v));
    CMat ruv = r_matrix(inst, u * v), rud = r_matrix(inst, u / v);
    return rel_resid(rud * k1 * ruv * k2, k2 * ruv * k1 * rud);
}

double dual_reflection_residual(const ModelInstance& inst, cd u, cd v) {
    cd q = inst.q;
    CMat k1 = kron(k_plus_matrix(inst, u), CMat::identity(2));
    CMat k2 = kron(CMat::identity(2), k_plus_matrix(inst, v));
    CMat ra = r_matrix(inst, v / u), rb = r_matrix(inst, 1.0 / (q * q * u * v));
    return rel_resid(ra * k1 * rb * k2, k2 * rb * k1 * ra);
}

} // namespace xxz
