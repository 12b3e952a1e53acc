#include <doctest.h>

#include "xxz/scalars.hpp"

using namespace xxz;

namespace {
const ModelInstance inst = sample_generic(17, 2);
const cd u(0.9, 0.35), v(1.1, -0.2);
} // namespace

TEST_CASE("one-point functions") {
    cd q = inst.q;
    CHECK(std::abs(b_fn(inst, q) - 1.0) < 1e-14); // b(q) = 1
    CHECK(std::abs(c_fn(cd(1.0))) < 1e-14);
    CHECK(std::abs(phi_fn(inst, u) - b_fn(inst, q * q * u * u) / b_fn(inst, q * u * u)) < 1e-14);
    // crossing-invariant variable
    CHECK(std::abs(inst.U(u) - inst.U(1.0 / (q * u))) < 1e-14);
    CHECK(std::abs(inst.U(u) - inst.U(-u)) < 1e-14);
}

TEST_CASE("two-point structure functions") {
    cd q = inst.q;
    CHECK(std::abs(G2(inst, u, v) * b_fn(inst, u / v) * b_fn(inst, q * u * v) - 1.0) < 1e-13);
    CHECK(std::abs(Ftilde(inst, u, v) -
                   (v / u) * G2(inst, u, v) * b_fn(inst, q * q * u * u) / phi_fn(inst, v)) < 1e-13);
    // empty products
    auto f2w = [&](cd a, cd b) { return f2(inst, a, b); };
    CHECK(std::abs(set_prod(f2w, u, {}) - 1.0) < 1e-15);
}

TEST_CASE("drop_at") {
    std::vector<cd> xs{1.0, 2.0, 3.0};
    auto d = drop_at(xs, 1);
    REQUIRE(d.size() == 2);
    CHECK(d[0] == cd(1.0));
    CHECK(d[1] == cd(3.0));
}

TEST_CASE("scalar functional identities") {
    GaugeFrame dl = gauge_dl(inst, 0, inst.N);
    std::vector<cd> us{cd(1.2, 0.4), cd(0.8, -0.6)};
    CHECK(fr1_residual(inst, dl, us, u, 0) < 1e-12);
    CHECK(fr2_residual(inst, dl, us, u, 0) < 1e-12);
    CHECK(fr3_residual(inst, us) < 1e-12);
    CHECK(offshell_component_residual(inst, us, u, {1, 0}) < 1e-12);
}

TEST_CASE("component polynomial crossing") {
    // P is built from crossing-symmetric two-point factors
    std::vector<int> h{0, 1};
    CHECK(std::abs(P_fn(inst, u, h) - P_fn(inst, 1.0 / (inst.q * u), h)) /
              std::abs(P_fn(inst, u, h)) <
          1e-12);
}

TEST_CASE("trivial weight") {
    CHECK(std::abs(W_factor(inst, {0, 0}) - 1.0) < 1e-15);
}
