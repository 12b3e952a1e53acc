#include "xxz/model.hpp"

#include <cmath>
#include <random>

namespace xxz {

static const cd I_(0.0, 1.0);

LeftBoundary left_boundary_from_xi(cd kappa, cd kappat, cd xi, cd xit) {
    for (cd z : {kappa, kappat, xi, xit})
        if (std::abs(z) == 0.0) throw std::invalid_argument("left boundary: zero parameter");
    LeftBoundary b{kappa, kappat, xi, xit, {}, {}};
    b.eps_m = I_ * kappat * kappa * (xi / xit + xit / xi);
    b.eps_p = I_ * kappat * kappa * (xi * xit + 1.0 / (xit * xi));
    return b;
}

RightBoundary right_boundary_from_mu(cd tau, cd taut, cd mu, cd mut) {
    for (cd z : {tau, taut, mu, mut})
        if (std::abs(z) == 0.0) throw std::invalid_argument("right boundary: zero parameter");
    RightBoundary b{tau, taut, mu, mut, {}, {}};
    b.nu_m = I_ * taut * tau * (mu / mut + mut / mu);
    b.nu_p = I_ * taut * tau * (mu * mut + 1.0 / (mu * mut));
    return b;
}

std::optional<std::string> genericity_violation(const ModelInstance& inst) {
    int N = inst.N;
    cd q = inst.q;
    for (int k = 1; k <= 2 * N + 4; ++k) {
        if (std::abs(std::pow(q, k) - 1.0) <= 1e-3) return "q^" + std::to_string(k) + " near 1";
        if (std::abs(std::pow(q, -k) - 1.0) <= 1e-3) return "q^-" + std::to_string(k) + " near 1";
    }
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j)
            if (std::abs(inst.U(inst.v[i]) - inst.U(inst.v[j])) <= 1e-3)
                return "U(v_i) collision at sites " + std::to_string(i + 1) + "," + std::to_string(j + 1);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            for (int k = -2; k <= 2; ++k)
                if (std::abs(inst.v[i] * inst.v[j] * std::pow(q, k) - 1.0) <= 1e-3)
                    return "inhomogeneity resonance v_i v_j q^k near 1";
    for (cd z : {inst.lb.kappa, inst.lb.kappat, inst.lb.xi, inst.lb.xit,
                 inst.rb.tau, inst.rb.taut, inst.rb.mu, inst.rb.mut}) {
        double a = std::abs(z);
        if (a < 0.1 || a > 10.0) return "boundary parameter modulus outside [0.1, 10]";
    }
    return std::nullopt;
}

ModelInstance sample_generic(unsigned long long seed, int N) {
    if (N < 1 || N > 6) throw std::invalid_argument("sample_generic: N must be 1..6");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    auto draw = [&](double lo, double hi) {
        double r = lo + (hi - lo) * unit(rng);
        double th = 2.0 * M_PI * unit(rng);
        return cd(r * std::cos(th), r * std::sin(th));
    };
    for (int attempt = 0; attempt < 1000; ++attempt) {
        ModelInstance inst;
        inst.N = N;
        inst.q = draw(1.1, 1.6);
        inst.v.resize(N);
        for (int i = 0; i < N; ++i) inst.v[i] = draw(0.8, 1.25);
        cd kappa = draw(0.5, 2.0), kappat = draw(0.5, 2.0), xi = draw(0.5, 2.0), xit = draw(0.5, 2.0);
        cd tau = draw(0.5, 2.0), taut = draw(0.5, 2.0), mu = draw(0.5, 2.0), mut = draw(0.5, 2.0);
        inst.lb = left_boundary_from_xi(kappa, kappat, xi, xit);
        inst.rb = right_boundary_from_mu(tau, taut, mu, mut);
        if (!genericity_violation(inst)) return inst;
    }
    throw std::runtime_error("sample_generic: rejection cap exceeded");
}

GaugeFrame gauge_dr(const ModelInstance& inst, int m0) {
    GaugeFrame f;
    f.m0 = m0;
    f.tag = GaugeFrame::Tag::dr;
    const auto& rb = inst.rb;
    f.alpha = I_ * std::pow(inst.q, m0 + inst.N) * rb.tau * rb.mu / (rb.taut * rb.mut);
    f.beta = I_ * std::pow(inst.q, -m0 - inst.N) * rb.tau * rb.mut / (rb.taut * rb.mu);
    check_frame(f, inst);
    return f;
}

GaugeFrame gauge_dl(const ModelInstance& inst, int m0, int M) {
    GaugeFrame f;
    f.m0 = m0;
    f.M = M;
    f.tag = GaugeFrame::Tag::dl;
    const auto& lb = inst.lb;
    f.alpha = -I_ * std::pow(inst.q, 1 + m0 + 2 * M) * lb.xi * lb.kappat / (lb.xit * lb.kappa);
    f.beta = -I_ * std::pow(inst.q, 1 - m0 - 2 * M) * lb.xit * lb.kappat / (lb.xi * lb.kappa);
    check_frame(f, inst);
    return f;
}

void check_frame(const GaugeFrame& f, const ModelInstance& inst) {
    for (int m = f.m0 - 2 * inst.N - 2; m <= f.m0 + 2 * inst.N + 2; ++m)
        if (std::abs(f.gamma(inst.q, m)) <= 1e-8)
            throw std::runtime_error("gauge frame degenerate: |gamma_" + std::to_string(m) + "| below 1e-8");
}

} // namespace xxz
