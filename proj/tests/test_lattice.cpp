#include <doctest.h>

#include "xxz/lattice.hpp"

using namespace xxz;

namespace {
const cd u(1.05, 0.3), v(0.85, -0.4), w(1.3, 0.1);
} // namespace

TEST_CASE("defining identities") {
    ModelInstance inst = sample_generic(23, 2);
    CHECK(ybe_residual(inst, u, v, w) < 1e-13);
    CHECK(reflection_residual(inst, u, v) < 1e-13);
    CHECK(dual_reflection_residual(inst, u, v) < 1e-13);
}

TEST_CASE("single-site monodromy assembled by hand") {
    ModelInstance inst = sample_generic(31, 1);
    cd v1 = inst.v[0];
    CMat r1 = r_matrix(inst, u / v1), r2 = r_matrix(inst, u * v1);
    CMat km = kron(k_minus_matrix(inst, u), CMat::identity(2));
    CMat expect = r1 * km * r2;
    CHECK(rel_resid(double_row_monodromy(inst, u), expect) < 1e-14);
}

TEST_CASE("transfer matrix structure") {
    ModelInstance inst = sample_generic(12, 2);
    cd q = inst.q;
    CHECK(rel_resid(transfer_matrix(inst, u), transfer_from_blocks(inst, u)) < 1e-13);
    CHECK(rel_resid(transfer_matrix(inst, -u), transfer_matrix(inst, u)) < 1e-13);
    CHECK(rel_resid(transfer_matrix(inst, 1.0 / (q * u)), transfer_matrix(inst, u)) < 1e-13);
    CMat id = CMat::identity(4);
    CHECK(rel_resid(transfer_matrix(inst, cd(1.0)), id * transfer_at_one(inst)) < 1e-13);
    CHECK(rel_resid(transfer_matrix(inst, cd(0, 1)), id * transfer_at_i(inst)) < 1e-13);
}

TEST_CASE("commuting family on a grid") {
    ModelInstance inst = sample_generic(3, 2);
    std::vector<cd> pts{u, v, w, u + 1e-6}; // include a near-degenerate pair
    std::vector<CMat> ts;
    for (cd p : pts) ts.push_back(transfer_matrix(inst, p));
    for (size_t i = 0; i < ts.size(); ++i)
        for (size_t j = i + 1; j < ts.size(); ++j)
            CHECK(rel_resid(ts[i] * ts[j], ts[j] * ts[i]) < 1e-11);
}

TEST_CASE("polynomial in the crossing variable") {
    ModelInstance inst = sample_generic(8, 3);
    int deg = inst.N + 2;
    // fit entry (0,0) through deg+1 points, then test a held-out point
    std::vector<cd> xs, ys;
    for (int k = 0; k <= deg; ++k) {
        cd p(0.8 + 0.07 * k, 0.3 - 0.05 * k);
        xs.push_back(inst.U(p));
        ys.push_back(transfer_matrix(inst, p)(0, 0));
    }
    UPoly fit = fit_poly(xs, ys, deg);
    cd held(1.15, 0.22);
    cd pred = fit.eval(inst.U(held)), truth = transfer_matrix(inst, held)(0, 0);
    CHECK(std::abs(pred - truth) / std::abs(truth) < 1e-8);
}

TEST_CASE("leading coefficient by Richardson extrapolation") {
    ModelInstance inst = sample_generic(14, 2);
    auto scaled = [&](cd uu) {
        return transfer_matrix(inst, uu)(0, 0) / std::pow(inst.U(uu), inst.N + 2);
    };
    cd u1 = 300.0, u2 = 600.0;
    // the correction is O(u^-2), so doubling u quarters it
    cd extrap = (4.0 * scaled(u2) - scaled(u1)) / 3.0;
    cd lead = transfer_leading_coeff(inst);
    CHECK(std::abs(extrap - lead) / std::abs(lead) < 1e-8);
}

TEST_CASE("sklyanin relation at every inhomogeneity") {
    for (int N = 1; N <= 3; ++N) {
        ModelInstance inst = sample_generic(40 + N, N);
        for (int i = 0; i < N; ++i) CHECK(sklyanin_residual(inst, i) < 1e-11);
    }
}

TEST_CASE("triangular right boundary kills the lowering block") {
    ModelInstance inst = sample_generic(6, 2);
    inst.rb.taut = 0.0; // upper-triangular K-minus
    auto blk = monodromy_blocks(inst, u);
    std::vector<cd> up(4, 0.0);
    up[0] = 1.0; // all spins up
    CHECK(vec_norm(blk.C * up) / blk.C.fnorm() < 1e-14);
}

TEST_CASE("degenerate inputs are rejected") {
    ModelInstance inst = sample_generic(2, 1);
    CHECK_THROWS(r_matrix(inst, cd(0.0)));
    CHECK_THROWS(monodromy_blocks(inst, std::sqrt(1.0 / inst.q))); // b(qu^2) = 0
}
