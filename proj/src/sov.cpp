#include "xxz/sov.hpp"

#include <cmath>
#include <stdexcept>

namespace xxz {

std::vector<cd> row_apply(const std::vector<cd>& row, const CMat& m) {
    std::vector<cd> out(m.cols, 0.0);
    for (int i = 0; i < m.rows; ++i) {
        cd ri = row[i];
        if (ri == cd(0.0)) continue;
        for (int j = 0; j < m.cols; ++j) out[j] += ri * m(i, j);
    }
    return out;
}

std::vector<std::vector<int>> bit_strings(int n) {
    std::vector<std::vector<int>> out;
    for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<int> h(n);
        for (int i = 0; i < n; ++i) h[i] = (mask >> (n - 1 - i)) & 1;
        out.push_back(std::move(h));
    }
    return out;
}

std::vector<cd> left_vacuum(const ModelInstance& inst, const GaugeFrame& dl, int m) {
    std::vector<cd> vec{1.0};
    for (int n = 1; n <= inst.N; ++n) {
        auto y = gv_Yt(dl, inst.q, inst.v[n - 1], m + n);
        std::vector<cd> next(vec.size() * 2);
        for (size_t j = 0; j < vec.size(); ++j) {
            next[2 * j] = vec[j] * y[0];
            next[2 * j + 1] = vec[j] * y[1];
        }
        vec = std::move(next);
    }
    return vec;
}

std::vector<cd> right_vacuum(const ModelInstance& inst, const GaugeFrame& dl, int m) {
    std::vector<cd> vec{1.0};
    for (int n = 1; n <= inst.N; ++n) {
        auto y = gv_Y(dl, inst.q, inst.v[n - 1], m - n);
        std::vector<cd> next(vec.size() * 2);
        for (size_t j = 0; j < vec.size(); ++j) {
            next[2 * j] = vec[j] * y[0];
            next[2 * j + 1] = vec[j] * y[1];
        }
        vec = std::move(next);
    }
    return vec;
}

std::vector<cd> left_sov_state(const ModelInstance& inst, const GaugeFrame& dl,
                               const std::vector<int>& hbar, int m) {
    std::vector<cd> row = left_vacuum(inst, dl, m);
    for (size_t i = 0; i < hbar.size(); ++i)
        if (hbar[i]) row = row_apply(row, dyn_A(inst, dl, 1.0 / inst.v[i], m + 2));
    return row;
}

std::vector<cd> right_sov_state(const ModelInstance& inst, const GaugeFrame& dl,
                                const std::vector<int>& hbar, int m) {
    std::vector<cd> vec = right_vacuum(inst, dl, m);
    for (size_t i = 0; i < hbar.size(); ++i)
        if (!hbar[i]) vec = d_hat(inst, dl, inst.v[i], m) * vec;
    return vec;
}

double check_left_vacuum_pseudo(const ModelInstance& inst, const GaugeFrame& dl, cd u, int m) {
    std::vector<cd> lhs = row_apply(left_vacuum(inst, dl, m), dyn_B(inst, dl, u, m));
    std::vector<cd> rhs = vec_scale(eta_left(inst, dl, m) * lambda_b_fn(inst, u), left_vacuum(inst, dl, m - 2));
    return rel_resid(lhs, rhs);
}

double check_left_sov_pseudo(const ModelInstance& inst, const GaugeFrame& dl,
                             const std::vector<int>& hbar, cd u, int m) {
    std::vector<cd> lhs = row_apply(left_sov_state(inst, dl, hbar, m), dyn_B(inst, dl, u, m));
    cd w = eta_left(inst, dl, m) * lambda_b_fn(inst, u);
    for (size_t i = 0; i < hbar.size(); ++i)
        if (hbar[i]) w *= f2(inst, 1.0 / inst.v[i], u);
    std::vector<cd> rhs = vec_scale(w, left_sov_state(inst, dl, hbar, m - 2));
    return rel_resid(lhs, rhs);
}

double check_right_vacuum_pseudo(const ModelInstance& inst, const GaugeFrame& dl, cd u, int m) {
    std::vector<cd> lhs = dyn_B(inst, dl, u, m) * right_vacuum(inst, dl, m);
    std::vector<cd> rhs =
        vec_scale(eta_right(inst, dl, m) * lambda_bt_fn(inst, u), right_vacuum(inst, dl, m + 2));
    return rel_resid(lhs, rhs);
}

double check_right_sov_creation(const ModelInstance& inst, const GaugeFrame& dl,
                                const std::vector<int>& hbar, cd u, int m) {
    std::vector<cd> lhs = dyn_B(inst, dl, u, m) * right_sov_state(inst, dl, hbar, m);
    int n0 = 0;
    cd w = eta_right(inst, dl, m) * lambda_bt_fn(inst, u);
    for (size_t i = 0; i < hbar.size(); ++i) {
        if (!hbar[i]) {
            ++n0;
            w *= f2(inst, inst.v[i], u);
        }
    }
    // dressing operators at fixed shift pick up one gamma cross-ratio each
    // when commuted past the creation operator
    cd gr = dl.gamma(inst.q, m + 1) * dl.gamma(inst.q, m + 2) /
            (dl.gamma(inst.q, m) * dl.gamma(inst.q, m + 3));
    w *= std::pow(gr, n0);
    std::vector<cd> rhs = vec_scale(w, right_sov_state(inst, dl, hbar, m + 2));
    return rel_resid(lhs, rhs);
}

double left_family_det(const ModelInstance& inst, const GaugeFrame& dl, int m) {
    int d = 1 << inst.N;
    CMat fam(d, d);
    auto hs = bit_strings(inst.N);
    for (int r = 0; r < d; ++r) {
        std::vector<cd> row = left_sov_state(inst, dl, hs[r], m);
        double nr = vec_norm(row);
        for (int c = 0; c < d; ++c) fam(r, c) = row[c] / nr;
    }
    return std::abs(determinant(fam));
}

double vacuum_overlap_residual(const ModelInstance& inst, const GaugeFrame& dr, const GaugeFrame& dl,
                               int m) {
    std::vector<cd> lv = left_vacuum(inst, dl, m);
    std::vector<cd> om = highest_weight_vector(inst, dr);
    cd ov = 0;
    for (size_t i = 0; i < lv.size(); ++i) ov += lv[i] * om[i];
    return rel_resid(ov, vacuum_overlap_formula(inst, dr, dl, m));
}

double dressed_overlap_residual(const ModelInstance& inst, const GaugeFrame& dr, const GaugeFrame& dl,
                                const std::vector<int>& hbar, int m) {
    std::vector<cd> lv = left_sov_state(inst, dl, hbar, m);
    std::vector<cd> om = highest_weight_vector(inst, dr);
    cd ov = 0;
    for (size_t i = 0; i < lv.size(); ++i) ov += lv[i] * om[i];
    return rel_resid(ov, W_factor(inst, hbar) * vacuum_overlap_formula(inst, dr, dl, m));
}

namespace {

cd eta_left_prod(const ModelInstance& inst, const GaugeFrame& dl, int m0, int count) {
    cd r = 1.0;
    for (int i = 1; i <= count; ++i) r *= eta_left(inst, dl, m0 + 2 * (inst.N - i));
    return r;
}

} // namespace

double proj_residual_long(const ModelInstance& inst, const std::vector<int>& hbar, cd u,
                          const std::vector<cd>& us, int m0) {
    GaugeFrame dr = gauge_dr(inst, m0);
    GaugeFrame dl = gauge_dl(inst, m0, inst.N);
    int mP = m0 + 2 * (inst.N - 1);
    std::vector<cd> lsv = left_sov_state(inst, dl, hbar, mP);
    std::vector<cd> ext(us);
    ext.push_back(u);
    std::vector<cd> psi = creation_string(inst, dl, ext, m0 - 2) * highest_weight_vector(inst, dr);
    cd lhs = 0;
    for (size_t i = 0; i < lsv.size(); ++i) lhs += lsv[i] * psi[i];
    cd rhs = lambda_b_fn(inst, u) * W_factor(inst, hbar) *
             eta_left_prod(inst, dl, m0, inst.N + 1) * vacuum_overlap_formula(inst, dr, dl, m0 - 4);
    for (cd x : us) rhs *= lambda_b_fn(inst, x);
    for (size_t i = 0; i < hbar.size(); ++i) {
        if (!hbar[i]) continue;
        cd f = f2(inst, 1.0 / inst.v[i], u);
        for (cd x : us) f *= f2(inst, 1.0 / inst.v[i], x);
        rhs *= f;
    }
    return rel_resid(lhs, rhs);
}

double proj_residual_short(const ModelInstance& inst, const std::vector<int>& hbar, cd u,
                           const std::vector<cd>& us, int m0) {
    GaugeFrame dr = gauge_dr(inst, m0);
    GaugeFrame dl = gauge_dl(inst, m0, inst.N);
    int mP = m0 + 2 * (inst.N - 1);
    std::vector<cd> lsv = left_sov_state(inst, dl, hbar, mP);
    std::vector<cd> ext(us);
    ext.push_back(u);
    std::vector<cd> psi = creation_string(inst, dl, ext, m0) * highest_weight_vector(inst, dr);
    cd lhs = 0;
    for (size_t i = 0; i < lsv.size(); ++i) lhs += lsv[i] * psi[i];
    cd rhs = lambda_b_fn(inst, u) * W_factor(inst, hbar) * eta_left_prod(inst, dl, m0, inst.N) *
             vacuum_overlap_formula(inst, dr, dl, m0 - 2);
    for (cd x : us) rhs *= lambda_b_fn(inst, x);
    for (size_t i = 0; i < hbar.size(); ++i) {
        if (!hbar[i]) continue;
        cd f = f2(inst, 1.0 / inst.v[i], u);
        for (cd x : us) f *= f2(inst, 1.0 / inst.v[i], x);
        rhs *= f;
    }
    return rel_resid(lhs, rhs);
}

double chi_identity_residual(const ModelInstance& inst, int m0) {
    GaugeFrame dr = gauge_dr(inst, m0);
    GaugeFrame dl = gauge_dl(inst, m0, inst.N);
    cd lhs = eta_hat(inst, dr, dl) * eta_left(inst, dl, m0 - 2) *
             vacuum_overlap_formula(inst, dr, dl, m0 - 4) /
             vacuum_overlap_formula(inst, dr, dl, m0 - 2);
    return std::abs(lhs + chi_const(inst)) / std::abs(chi_const(inst));
}

CMat sov_gram(const ModelInstance& inst, const GaugeFrame& dl, int m) {
    int d = 1 << inst.N;
    auto hs = bit_strings(inst.N);
    std::vector<std::vector<cd>> rights(d);
    for (int c = 0; c < d; ++c) rights[c] = right_sov_state(inst, dl, hs[c], m + 2);
    CMat g(d, d);
    for (int r = 0; r < d; ++r) {
        std::vector<cd> lv = left_sov_state(inst, dl, hs[r], m);
        for (int c = 0; c < d; ++c) {
            cd s = 0;
            for (int i = 0; i < d; ++i) s += lv[i] * rights[c][i];
            g(r, c) = s;
        }
    }
    return g;
}

double biorthogonality_residual(const ModelInstance& inst, const GaugeFrame& dl, int m) {
    CMat g = sov_gram(inst, dl, m);
    double offd = 0, diag = 0;
    for (int r = 0; r < g.rows; ++r)
        for (int c = 0; c < g.cols; ++c) {
            double a = std::norm(g(r, c));
            (r == c ? diag : offd) += a;
        }
    return std::sqrt(offd) / std::sqrt(diag);
}

double mu_residual(const ModelInstance& inst, const GaugeFrame& dl, int m) {
    CMat g = sov_gram(inst, dl, m);
    auto hs = bit_strings(inst.N);
    double worst = 0;
    for (int r = 0; r < g.rows; ++r) {
        cd mu = mu_closed(inst, dl, hs[r], m);
        worst = std::max(worst, std::abs(mu - g(r, r)) / std::abs(g(r, r)));
    }
    return worst;
}

namespace {

cd interp_gj(const ModelInstance& inst, cd u, int j) {
    cd Uu = inst.U(u), Uj = inst.U(inst.v[j]);
    cd r = (Uu * Uu - 1.0) / (Uj * Uj - 1.0);
    for (int k = 0; k < inst.N; ++k) {
        if (k == j) continue;
        cd Uk = inst.U(inst.v[k]);
        r *= (Uu - Uk) / (Uj - Uk);
    }
    return r;
}

cd interp_f(const ModelInstance& inst, cd u) {
    cd Uu = inst.U(u);
    cd t1 = transfer_at_one(inst), ti = transfer_at_i(inst);
    cd r1 = t1 * (Uu + 1.0) / 2.0, r2 = ti * (Uu - 1.0) / (-2.0);
    cd r3 = transfer_leading_coeff(inst) * (Uu * Uu - 1.0);
    for (int k = 0; k < inst.N; ++k) {
        cd Uk = inst.U(inst.v[k]);
        r1 *= (Uu - Uk) / (1.0 - Uk);
        r2 *= (Uk - Uu) / (1.0 + Uk);
        r3 *= Uu - Uk;
    }
    return r1 + r2 + r3;
}

} // namespace

std::vector<SovSolution> sov_spectrum(const ModelInstance& inst) {
    int N = inst.N, d = 1 << N;
    cd q = inst.q;
    std::vector<cd> rsk(N);
    for (int i = 0; i < N; ++i) rsk[i] = sklyanin_scalar(inst, i);
    CMat gmat(N, N);
    std::vector<cd> fvec(N);
    for (int i = 0; i < N; ++i) {
        cd p = inst.v[i] / q;
        for (int j = 0; j < N; ++j) gmat(i, j) = interp_gj(inst, p, j);
        fvec[i] = interp_f(inst, p);
    }
    double scale = 1.0;
    for (cd r : rsk) scale = std::max(scale, std::abs(r));

    auto sys_f = [&](const std::vector<cd>& x, double s) {
        std::vector<cd> f(N);
        for (int i = 0; i < N; ++i) {
            cd acc = fvec[i];
            for (int j = 0; j < N; ++j) {
                double w = (i == j) ? 1.0 : s;
                acc += w * gmat(i, j) * x[j];
            }
            f[i] = x[i] * acc - rsk[i];
        }
        return f;
    };

    std::vector<SovSolution> out;
    for (int mask = 0; mask < d; ++mask) {
        std::vector<cd> x(N);
        for (int i = 0; i < N; ++i) {
            // decoupled quadratic: g_ii x^2 + f_i x - R_i = 0
            cd a = gmat(i, i), b = fvec[i], c = -rsk[i];
            cd disc = std::sqrt(b * b - 4.0 * a * c);
            x[i] = ((mask >> i) & 1) ? (-b + disc) / (2.0 * a) : (-b - disc) / (2.0 * a);
        }
        const double h = 1e-7;
        for (int step = 0; step < 20; ++step) {
            double s = 0.05 + (1.0 - 0.05) * step / 19.0;
            for (int it = 0; it < 50; ++it) {
                std::vector<cd> f = sys_f(x, s);
                double fmax = 0;
                for (cd z : f) fmax = std::max(fmax, std::abs(z));
                if (fmax < 1e-11 * scale) break;
                CMat jac(N, N);
                for (int j = 0; j < N; ++j) {
                    std::vector<cd> xp = x;
                    xp[j] += h;
                    std::vector<cd> fp = sys_f(xp, s);
                    for (int i = 0; i < N; ++i) jac(i, j) = (fp[i] - f[i]) / h;
                }
                std::vector<cd> dx = solve(jac, f);
                for (int i = 0; i < N; ++i) x[i] -= dx[i];
            }
        }
        SovSolution sol;
        sol.lam_at_v = x;
        double fmax = 0;
        for (cd z : sys_f(x, 1.0)) fmax = std::max(fmax, std::abs(z));
        sol.sys_res = fmax / scale;
        out.push_back(std::move(sol));
    }
    return out;
}

std::vector<cd> sov_eigenstate(const ModelInstance& inst, const std::vector<cd>& roots, int m0) {
    int N = inst.N, d = 1 << N;
    GaugeFrame dl = gauge_dl(inst, m0, N);
    int mE = m0 + 2 * (N - 1);
    std::vector<cd> phi(d, 0.0);
    for (const auto& h : bit_strings(N)) {
        cd w = 1.0 / mu_closed(inst, dl, h, mE);
        for (int j = 0; j < N; ++j) {
            if (!h[j]) continue;
            cd vc = 1.0 / inst.v[j];
            w *= lam_full_fn(inst, vc, roots) / (inst.v[j] * kt_plus_fn(inst, vc) * phi_fn(inst, vc));
        }
        phi = vec_add(phi, vec_scale(w, right_sov_state(inst, dl, h, mE + 2)));
    }
    return phi;
}

SovStateCheck check_sov_state(const ModelInstance& inst, const std::vector<cd>& roots, int m0) {
    std::vector<cd> phi = sov_eigenstate(inst, roots, m0);
    cd ur(0.83 * std::cos(1.13), 0.83 * std::sin(1.13));
    std::vector<cd> tphi = transfer_matrix(inst, ur) * phi;
    SovStateCheck chk;
    chk.eig_res = vec_norm(vec_sub(tphi, vec_scale(lam_full_fn(inst, ur, roots), phi))) / vec_norm(tphi);
    GaugeFrame dr = gauge_dr(inst, m0);
    GaugeFrame dl = gauge_dl(inst, m0, inst.N);
    std::vector<cd> psi = bethe_vector(inst, dr, dl, roots, m0);
    cd cp = vec_dot(phi, psi) / vec_dot(phi, phi);
    chk.prop_res = vec_norm(vec_sub(psi, vec_scale(cp, phi))) / vec_norm(psi);
    return chk;
}

} // namespace xxz
