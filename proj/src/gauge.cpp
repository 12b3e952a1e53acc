#include "xxz/gauge.hpp"

#include <cmath>

namespace xxz {

std::array<cd, 2> gv_X(const GaugeFrame& f, cd q, cd u, int m) {
    return {f.alpha * std::pow(q, -m) / u, cd(1.0)};
}

std::array<cd, 2> gv_Y(const GaugeFrame& f, cd q, cd u, int m) {
    return {f.beta * std::pow(q, m) / u, cd(1.0)};
}

std::array<cd, 2> gv_Xt(const GaugeFrame& f, cd q, cd u, int m) {
    cd pref = q * u / f.gamma(q, m - 1);
    return {-pref, pref * f.alpha * std::pow(q, -m) / u};
}

std::array<cd, 2> gv_Yt(const GaugeFrame& f, cd q, cd u, int m) {
    cd pref = q * u / f.gamma(q, m + 1);
    return {pref, -pref * f.beta * std::pow(q, m) / u};
}

CMat aux_sandwich(const std::array<cd, 2>& l, const CMat& mono, const std::array<cd, 2>& r, int d) {
    CMat out(d, d);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            cd w = l[i] * r[j];
            if (w == cd(0)) continue;
            for (int a = 0; a < d; ++a)
                for (int c = 0; c < d; ++c) out(a, c) += w * mono(i * d + a, j * d + c);
        }
    return out;
}

namespace {
CMat need_mono(const ModelInstance& inst, cd u, const CMat* mono) {
    return mono ? *mono : double_row_monodromy(inst, u);
}
} // namespace

CMat dyn_A(const ModelInstance& inst, const GaugeFrame& f, cd u, int m, const CMat* mono) {
    CMat k = need_mono(inst, u, mono);
    int d = 1 << inst.N;
    return aux_sandwich(gv_Yt(f, inst.q, u, m - 2), k, gv_X(f, inst.q, 1.0 / u, m), d);
}

CMat dyn_B(const ModelInstance& inst, const GaugeFrame& f, cd u, int m, const CMat* mono) {
    CMat k = need_mono(inst, u, mono);
    int d = 1 << inst.N;
    return aux_sandwich(gv_Yt(f, inst.q, u, m), k, gv_Y(f, inst.q, 1.0 / u, m), d);
}

CMat dyn_C(const ModelInstance& inst, const GaugeFrame& f, cd u, int m, const CMat* mono) {
    CMat k = need_mono(inst, u, mono);
    int d = 1 << inst.N;
    return aux_sandwich(gv_Xt(f, inst.q, u, m), k, gv_X(f, inst.q, 1.0 / u, m), d);
}

CMat dyn_D(const ModelInstance& inst, const GaugeFrame& f, cd u, int m, const CMat* mono) {
    CMat k = need_mono(inst, u, mono);
    int d = 1 << inst.N;
    cd q = inst.q;
    cd split = b_fn(inst, q * u * u);
    if (std::abs(split) < 1e-10) throw std::runtime_error("dyn_D: b(qu^2) near zero");
    CMat dh = aux_sandwich(gv_Xt(f, q, u, m + 2), k, gv_Y(f, q, 1.0 / u, m), d) *
              (f.gamma(q, m + 1) / f.gamma(q, m));
    CMat a = dyn_A(inst, f, u, m, &k);
    return dh - a * (f.gamma(q, 1.0 / (u * u), m + 1) / (split * f.gamma(q, m)));
}

CMat d_hat(const ModelInstance& inst, const GaugeFrame& f, cd u, int m, const CMat* mono) {
    CMat k = need_mono(inst, u, mono);
    int d = 1 << inst.N;
    cd q = inst.q;
    return aux_sandwich(gv_Xt(f, q, u, m + 2), k, gv_Y(f, q, 1.0 / u, m), d) *
           (f.gamma(q, m + 1) / f.gamma(q, m));
}

cd a_tilde(const ModelInstance& inst, cd u) {
    return phi_fn(inst, u) * kt_plus_fn(inst, u) / u;
}

cd d_tilde(const ModelInstance& inst, cd u) {
    return kt_plus_fn(inst, 1.0 / (inst.q * u)) / u;
}

cd a_tilde_m(const ModelInstance& inst, const GaugeFrame& f, cd u, int m) {
    cd q = inst.q;
    return a_tilde(inst, u) - delta_m(inst, f, m) * phi_fn(inst, 1.0 / (q * u)) * c_fn(q * u) / u;
}

cd d_tilde_m(const ModelInstance& inst, const GaugeFrame& f, cd u, int m) {
    return d_tilde(inst, u) + c_fn(inst.q * u) * delta_m(inst, f, m) / u;
}

CMat gauged_transfer_diag(const ModelInstance& inst, const GaugeFrame& f, cd u, int m, const CMat* mono) {
    CMat k = need_mono(inst, u, mono);
    return dyn_A(inst, f, u, m, &k) * a_tilde_m(inst, f, u, m) +
           dyn_D(inst, f, u, m, &k) * d_tilde_m(inst, f, u, m);
}

CMat gauged_transfer(const ModelInstance& inst, const GaugeFrame& f, cd u, int m, const CMat* mono) {
    CMat k = need_mono(inst, u, mono);
    cd q = inst.q;
    return gauged_transfer_diag(inst, f, u, m, &k) +
           dyn_B(inst, f, u, m, &k) * (c_fn(q * u) / u * zeta_m(inst, f, m)) -
           dyn_C(inst, f, u, m, &k) * (c_fn(q * u) / u * zeta_t_m(inst, f, m));
}

CommutationResiduals check_commutation(const ModelInstance& inst, const GaugeFrame& f, cd u, cd v, int m) {
    CMat ku = double_row_monodromy(inst, u);
    CMat kv = double_row_monodromy(inst, v);
    CommutationResiduals out{};

    CMat bb1 = dyn_B(inst, f, u, m + 2, &ku) * dyn_B(inst, f, v, m, &kv);
    CMat bb2 = dyn_B(inst, f, v, m + 2, &kv) * dyn_B(inst, f, u, m, &ku);
    out.bb = rel_resid(bb1, bb2);

    CMat lhs = dyn_A(inst, f, u, m + 2, &ku) * dyn_B(inst, f, v, m, &kv);
    CMat rhs = dyn_B(inst, f, v, m, &kv) * dyn_A(inst, f, u, m, &ku) * f2(inst, u, v) +
               dyn_B(inst, f, u, m, &ku) * dyn_A(inst, f, v, m, &kv) * g_dyn(inst, f, u, v, m) +
               dyn_B(inst, f, u, m, &ku) * dyn_D(inst, f, v, m, &kv) * w_dyn(inst, f, u, v, m);
    out.ab = rel_resid(lhs, rhs);

    lhs = dyn_D(inst, f, u, m + 2, &ku) * dyn_B(inst, f, v, m, &kv);
    rhs = dyn_B(inst, f, v, m, &kv) * dyn_D(inst, f, u, m, &ku) * h2(inst, u, v) +
          dyn_B(inst, f, u, m, &ku) * dyn_D(inst, f, v, m, &kv) * k_dyn(inst, f, u, v, m) +
          dyn_B(inst, f, u, m, &ku) * dyn_A(inst, f, v, m, &kv) * n_dyn(inst, f, u, v, m);
    out.db = rel_resid(lhs, rhs);
    return out;
}

std::pair<double, double> check_linear_relations(const ModelInstance& inst, const GaugeFrame& dr,
                                                 const GaugeFrame& dl, cd u, int p, int m) {
    CMat k = double_row_monodromy(inst, u);
    cd bc = lin_b_coeff(inst, dr, dl, p, m);
    cd cc = lin_c_coeff(inst, dr, dl, p, m);
    CMat lhsA = dyn_A(inst, dl, u, p, &k);
    CMat rhsA = dyn_A(inst, dr, u, m, &k) + dyn_C(inst, dr, u, m, &k) * cc +
                dyn_B(inst, dl, u, p - 2, &k) * bc;
    CMat lhsD = dyn_D(inst, dl, u, p, &k);
    cd ph = phi_fn(inst, u);
    CMat rhsD = dyn_D(inst, dr, u, m, &k) - dyn_C(inst, dr, u, m, &k) * (ph * cc) -
                dyn_B(inst, dl, u, p - 2, &k) * (ph * bc);
    return {rel_resid(lhsA, rhsA), rel_resid(lhsD, rhsD)};
}

} // namespace xxz
