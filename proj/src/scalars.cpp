#include "xxz/scalars.hpp"

#include <cmath>

namespace xxz {

static const cd I_(0.0, 1.0);

cd b_fn(const ModelInstance& inst, cd u) { return (u - 1.0 / u) / (inst.q - 1.0 / inst.q); }

cd c_fn(cd u) { return u * u - 1.0 / (u * u); }

cd phi_fn(const ModelInstance& inst, cd u) {
    cd q = inst.q;
    return b_fn(inst, q * q * u * u) / b_fn(inst, q * u * u);
}

cd k_minus_fn(const ModelInstance& inst, cd u) { return inst.rb.nu_m * u + inst.rb.nu_p / u; }

cd k_plus_fn(const ModelInstance& inst, cd u) { return inst.lb.eps_p * u + inst.lb.eps_m / u; }

cd kt_minus_fn(const ModelInstance& inst, cd u) {
    const auto& rb = inst.rb;
    return I_ * rb.taut * rb.tau * (rb.mu * u + 1.0 / (rb.mu * u)) * (u / rb.mut + rb.mut / u);
}

cd kt_plus_fn(const ModelInstance& inst, cd u) {
    const auto& lb = inst.lb;
    return I_ * lb.kappat * lb.kappa * (lb.xit * u + 1.0 / (lb.xit * u)) * (u / lb.xi + lb.xi / u);
}

cd lambda_fn(const ModelInstance& inst, cd u) {
    cd r = 1.0;
    for (cd vi : inst.v) r *= b_fn(inst, inst.q * u / vi) * b_fn(inst, inst.q * u * vi);
    return r;
}

cd lambda_b_fn(const ModelInstance& inst, cd u) {
    cd r = u * c_fn(u);
    for (cd vn : inst.v) r *= b_fn(inst, inst.q * u / vn) * b_fn(inst, u * vn);
    return r;
}

cd lambda_bt_fn(const ModelInstance& inst, cd u) {
    cd r = u * c_fn(u);
    for (cd vn : inst.v) r *= b_fn(inst, inst.q * u * vn) * b_fn(inst, u / vn);
    return r;
}

cd psi_fn(const ModelInstance& inst, cd u) {
    return phi_fn(inst, u) * kt_plus_fn(inst, u) * kt_minus_fn(inst, u) * lambda_fn(inst, u);
}

cd f2(const ModelInstance& inst, cd u, cd v) {
    cd q = inst.q;
    return b_fn(inst, q * v / u) * b_fn(inst, u * v) / (b_fn(inst, v / u) * b_fn(inst, q * u * v));
}

cd g2(const ModelInstance& inst, cd u, cd v) {
    return phi_fn(inst, 1.0 / (inst.q * v)) / b_fn(inst, u / v);
}

cd w2(const ModelInstance& inst, cd u, cd v) { return -1.0 / b_fn(inst, inst.q * u * v); }

cd h2(const ModelInstance& inst, cd u, cd v) {
    cd q = inst.q;
    return b_fn(inst, q * q * u * v) * b_fn(inst, q * u / v) / (b_fn(inst, q * u * v) * b_fn(inst, u / v));
}

cd k2(const ModelInstance& inst, cd u, cd v) { return phi_fn(inst, u) / b_fn(inst, v / u); }

cd n2(const ModelInstance& inst, cd u, cd v) {
    return phi_fn(inst, u) * phi_fn(inst, 1.0 / (inst.q * v)) / b_fn(inst, inst.q * u * v);
}

cd G2(const ModelInstance& inst, cd u, cd v) {
    return 1.0 / (b_fn(inst, u / v) * b_fn(inst, inst.q * u * v));
}

cd Ftilde(const ModelInstance& inst, cd u, cd v) {
    cd q = inst.q;
    return (v / u) * G2(inst, u, v) * b_fn(inst, q * q * u * u) / phi_fn(inst, v);
}

std::vector<cd> drop_at(const std::vector<cd>& xs, size_t i) {
    std::vector<cd> out;
    out.reserve(xs.size() - 1);
    for (size_t j = 0; j < xs.size(); ++j)
        if (j != i) out.push_back(xs[j]);
    return out;
}

cd g_dyn(const ModelInstance& inst, const GaugeFrame& f, cd u, cd v, int m) {
    return f.gamma(inst.q, u / v, m + 1) / f.gamma(inst.q, m + 1) * g2(inst, u, v);
}

cd w_dyn(const ModelInstance& inst, const GaugeFrame& f, cd u, cd v, int m) {
    return f.gamma(inst.q, u * v, m) / f.gamma(inst.q, m + 1) * w2(inst, u, v);
}

cd k_dyn(const ModelInstance& inst, const GaugeFrame& f, cd u, cd v, int m) {
    return f.gamma(inst.q, v / u, m + 1) / f.gamma(inst.q, m + 1) * k2(inst, u, v);
}

cd n_dyn(const ModelInstance& inst, const GaugeFrame& f, cd u, cd v, int m) {
    return f.gamma(inst.q, 1.0 / (u * v), m + 2) / f.gamma(inst.q, m + 1) * n2(inst, u, v);
}

cd zeta_m(const ModelInstance& inst, const GaugeFrame& f, int m) {
    const auto& lb = inst.lb;
    cd q = inst.q;
    return lb.kappa * lb.kappa / f.gamma(q, m) *
           (f.alpha * std::pow(q, -m - 1) + I_ * lb.kappat * lb.xi / (lb.kappa * lb.xit)) *
           (f.alpha * std::pow(q, -m - 1) + I_ * lb.kappat * lb.xit / (lb.kappa * lb.xi));
}

cd zeta_t_m(const ModelInstance& inst, const GaugeFrame& f, int m) {
    const auto& lb = inst.lb;
    cd q = inst.q;
    return lb.kappa * lb.kappa / f.gamma(q, m) *
           (f.beta * std::pow(q, m - 1) + I_ * lb.kappat * lb.xi / (lb.kappa * lb.xit)) *
           (f.beta * std::pow(q, m - 1) + I_ * lb.kappat * lb.xit / (lb.kappa * lb.xi));
}

cd delta_m(const ModelInstance& inst, const GaugeFrame& f, int m) {
    const auto& lb = inst.lb;
    cd q = inst.q;
    return lb.kappa * lb.kappa / f.gamma(q, m + 1) *
           (f.alpha * std::pow(q, -m - 1) + I_ * lb.kappat * lb.xi / (lb.kappa * lb.xit)) *
           (f.beta * std::pow(q, m + 1) + I_ * lb.kappat * lb.xit / (lb.kappa * lb.xi));
}

cd lin_b_coeff(const ModelInstance& inst, const GaugeFrame& dr, const GaugeFrame& dl, int p, int m) {
    cd q = inst.q;
    cd den = dr.alpha - std::pow(q, m + p - 2) * dl.beta;
    if (std::abs(den) < 1e-8) throw std::runtime_error("lin_b_coeff: degenerate denominator");
    return (dr.alpha - std::pow(q, m - p) * dl.alpha) / den;
}

cd lin_c_coeff(const ModelInstance& inst, const GaugeFrame& dr, const GaugeFrame& dl, int p, int m) {
    cd q = inst.q;
    cd den = std::pow(q, 2 - m - p) * dr.alpha - dl.beta;
    if (std::abs(den) < 1e-8) throw std::runtime_error("lin_c_coeff: degenerate denominator");
    return (std::pow(q, m - p) * dr.beta - dl.beta) / den;
}

cd eta_m0(const ModelInstance& inst, const GaugeFrame& dr, const GaugeFrame& dl) {
    cd q = inst.q;
    return (dr.alpha - dl.alpha) / (dr.alpha - dl.beta * std::pow(q, 2 * dr.m0 - 2));
}

cd eta_hat(const ModelInstance& inst, const GaugeFrame& dr, const GaugeFrame& dl) {
    cd q = inst.q;
    return inst.lb.kappa * inst.lb.kappa / q * dl.gamma(q, dr.m0 - 1) * eta_m0(inst, dr, dl);
}

cd chi_const(const ModelInstance& inst) {
    const auto& lb = inst.lb;
    const auto& rb = inst.rb;
    cd q = inst.q;
    return -lb.kappa * lb.kappat * rb.tau * rb.taut *
           (lb.kappa * rb.tau / (lb.kappat * rb.taut) + lb.kappat * rb.taut / (lb.kappa * rb.tau) +
            lb.xi * rb.mut / (lb.xit * rb.mu) * std::pow(q, inst.N + 1) +
            lb.xit * rb.mu / (lb.xi * rb.mut) * std::pow(q, -inst.N - 1));
}

cd eta_left(const ModelInstance& inst, const GaugeFrame& dl, int m) {
    const auto& rb = inst.rb;
    cd q = inst.q;
    int N = inst.N;
    return -q * rb.taut * rb.taut *
           (std::pow(q, N + m) * dl.beta - I_ * rb.mut * rb.tau / (rb.mu * rb.taut)) *
           (std::pow(q, N + m) * dl.beta - I_ * rb.mu * rb.tau / (rb.mut * rb.taut)) *
           dl.gamma(q, m) / (dl.gamma(q, m + N) * dl.gamma(q, m + N + 1));
}

cd eta_right(const ModelInstance& inst, const GaugeFrame& dl, int m) {
    const auto& rb = inst.rb;
    cd q = inst.q;
    int N = inst.N;
    return -q * rb.taut * rb.taut *
           (std::pow(q, -N + m) * dl.beta - I_ * rb.mut * rb.tau / (rb.mu * rb.taut)) *
           (std::pow(q, -N + m) * dl.beta - I_ * rb.mu * rb.tau / (rb.mut * rb.taut)) /
           dl.gamma(q, m + 1);
}

cd eta_left_bar(const ModelInstance& inst, const GaugeFrame& dl, int m) {
    cd q = inst.q;
    return eta_left(inst, dl, m) * dl.gamma(q, m + inst.N) * dl.gamma(q, m + inst.N + 1) / dl.gamma(q, m);
}

cd vacuum_overlap_formula(const ModelInstance& inst, const GaugeFrame& dr, const GaugeFrame& dl, int m) {
    cd q = inst.q;
    cd r = 1.0;
    for (int n = 1; n <= inst.N; ++n)
        r *= q * (dr.alpha * std::pow(q, -dr.m0 - n) - dl.beta * std::pow(q, m + n)) / dl.gamma(q, m + n + 1);
    return r;
}

cd W_factor(const ModelInstance& inst, const std::vector<int>& hbar) {
    cd r = 1.0;
    for (int i = 0; i < inst.N; ++i)
        if (hbar[i])
            r *= kt_minus_fn(inst, 1.0 / inst.v[i]) * lambda_fn(inst, 1.0 / inst.v[i]) / inst.v[i];
    return r;
}

cd mu_closed(const ModelInstance& inst, const GaugeFrame& dl, const std::vector<int>& hbar, int m) {
    cd q = inst.q;
    int N = inst.N;
    cd r = 1.0;
    for (int i = 1; i <= N; ++i) {
        int hi = hbar[i - 1];
        cd vi = inst.v[i - 1];
        r *= eta_left_bar(inst, dl, m - 2 * (i - 1)) / dl.gamma(q, m + 1 + i) *
             std::pow(vi, -2 * hi + 1) * c_fn(vi) * b_fn(inst, std::pow(q, -2 * hi + 1) * vi * vi);
        for (int j = 1; j < i; ++j) {
            int hj = hbar[j - 1];
            cd vj = inst.v[j - 1];
            r *= b_fn(inst, std::pow(q, -2 * hj + 1) * vj / vi) *
                 b_fn(inst, std::pow(q, -hj - hi + 1) * vi / vj) *
                 b_fn(inst, std::pow(q, -2 * hj + 1) * vi * vj) *
                 b_fn(inst, std::pow(q, hj - hi) * vi * vj);
        }
    }
    // gamma correction per h_i = 0, pinned against the direct Gram oracle
    int n0 = 0;
    for (int h : hbar) n0 += (h == 0);
    for (int k = 0; k < n0; ++k) r *= dl.gamma(q, m + 3) / dl.gamma(q, m + 2);
    return r;
}

cd P_fn(const ModelInstance& inst, cd u, const std::vector<int>& hbar) {
    cd q = inst.q;
    cd r = 1.0;
    for (int i = 0; i < inst.N; ++i) {
        cd vi = inst.v[i];
        if (hbar[i])
            r *= b_fn(inst, u * vi) * b_fn(inst, q * u / vi);
        else
            r *= b_fn(inst, q * u * vi) * b_fn(inst, u / vi);
    }
    return r;
}

double fr1_residual(const ModelInstance& inst, const GaugeFrame& f, const std::vector<cd>& us, cd u, int m) {
    auto f2w = [&](cd a, cd b) { return f2(inst, a, b); };
    auto h2w = [&](cd a, cd b) { return h2(inst, a, b); };
    cd lhs = set_prod(f2w, u, us);
    for (size_t i = 0; i < us.size(); ++i) {
        cd ui = us[i];
        auto usi = drop_at(us, i);
        lhs += g_dyn(inst, f, u, ui, m - 2) * set_prod(f2w, ui, usi) -
               phi_fn(inst, ui) * w_dyn(inst, f, u, ui, m - 2) * set_prod(h2w, ui, usi);
    }
    cd rhs = f.gamma(inst.q, m - 2 * static_cast<int>(us.size()) - 1) / f.gamma(inst.q, m - 1);
    return rel_resid(lhs, rhs);
}

double fr2_residual(const ModelInstance& inst, const GaugeFrame& f, const std::vector<cd>& us, cd u, int m) {
    auto f2w = [&](cd a, cd b) { return f2(inst, a, b); };
    auto h2w = [&](cd a, cd b) { return h2(inst, a, b); };
    cd lhs = set_prod(h2w, u, us);
    for (size_t i = 0; i < us.size(); ++i) {
        cd ui = us[i];
        auto usi = drop_at(us, i);
        lhs += (phi_fn(inst, ui) * k_dyn(inst, f, u, ui, m - 2) * set_prod(h2w, ui, usi) -
                n_dyn(inst, f, u, ui, m - 2) * set_prod(f2w, ui, usi)) /
               phi_fn(inst, u);
    }
    cd rhs = f.gamma(inst.q, m - 2 * static_cast<int>(us.size()) - 1) / f.gamma(inst.q, m - 1);
    return rel_resid(lhs, rhs);
}

double fr3_residual(const ModelInstance& inst, const std::vector<cd>& us) {
    auto f2w = [&](cd a, cd b) { return f2(inst, a, b); };
    auto h2w = [&](cd a, cd b) { return h2(inst, a, b); };
    cd q = inst.q;
    cd lhs = 0.0;
    for (size_t i = 0; i < us.size(); ++i) {
        cd ui = us[i];
        auto usi = drop_at(us, i);
        lhs += phi_fn(inst, ui) * set_prod(h2w, ui, usi) +
               phi_fn(inst, 1.0 / (q * ui)) * set_prod(f2w, ui, usi);
    }
    int M = static_cast<int>(us.size());
    cd rhs = (std::pow(q, 2 * M) - std::pow(q, -2 * M)) / (q - 1.0 / q);
    return rel_resid(lhs, rhs);
}

double offshell_component_residual(const ModelInstance& inst, const std::vector<cd>& roots, cd u,
                                   const std::vector<int>& hbar) {
    cd q = inst.q;
    cd lhs = 0.0;
    for (size_t i = 0; i < roots.size(); ++i) {
        cd ui = roots[i];
        cd denom = 1.0;
        for (size_t j = 0; j < roots.size(); ++j)
            if (j != i) denom *= b_fn(inst, q * ui * roots[j]) * b_fn(inst, ui / roots[j]);
        lhs += 1.0 / (b_fn(inst, q * u * ui) * b_fn(inst, u / ui)) * P_fn(inst, ui, hbar) / denom;
    }
    cd denom = 1.0;
    for (cd un : roots) denom *= b_fn(inst, q * u * un) * b_fn(inst, u / un);
    cd rhs = P_fn(inst, u, hbar) / denom - 1.0;
    return std::abs(lhs - rhs) / (std::abs(lhs) + std::abs(rhs) + 1.0);
}

} // namespace xxz
