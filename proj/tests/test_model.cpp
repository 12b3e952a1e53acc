#include <doctest.h>

#include "xxz/model.hpp"

using namespace xxz;

TEST_CASE("sampling is deterministic in the seed") {
    ModelInstance a = sample_generic(42, 2);
    ModelInstance b = sample_generic(42, 2);
    ModelInstance c = sample_generic(43, 2);
    CHECK(a.q == b.q);
    CHECK(a.v[0] == b.v[0]);
    CHECK(a.lb.xi == b.lb.xi);
    CHECK(a.q != c.q);
}

TEST_CASE("generic draws pass the genericity screen") {
    // a wide sweep; every accepted draw must satisfy its own screen
    for (unsigned long long s = 1; s <= 100; ++s) {
        ModelInstance inst = sample_generic(s, 3);
        CHECK(!genericity_violation(inst).has_value());
    }
}

TEST_CASE("genericity screen catches bad parameters") {
    ModelInstance inst = sample_generic(1, 2);
    inst.q = 1.0; // root of unity
    CHECK(genericity_violation(inst).has_value());

    ModelInstance inst2 = sample_generic(1, 2);
    inst2.v[1] = inst2.v[0];
    CHECK(genericity_violation(inst2).has_value());
}

TEST_CASE("derived boundary couplings") {
    ModelInstance inst = sample_generic(9, 1);
    const auto& lb = inst.lb;
    cd i(0, 1);
    CHECK(std::abs(lb.eps_m - i * lb.kappat * lb.kappa * (lb.xi / lb.xit + lb.xit / lb.xi)) < 1e-14);
    CHECK(std::abs(lb.eps_p - i * lb.kappat * lb.kappa * (lb.xi * lb.xit + 1.0 / (lb.xit * lb.xi))) < 1e-14);
}

TEST_CASE("gauge frames") {
    ModelInstance inst = sample_generic(4, 2);
    GaugeFrame dr = gauge_dr(inst, 0);
    GaugeFrame dl2 = gauge_dl(inst, 0, 2);
    GaugeFrame dl3 = gauge_dl(inst, 0, 3);
    check_frame(dr, inst);
    check_frame(dl2, inst);
    // the string-length label only shifts the frame by powers of q^2
    CHECK(std::abs(dl3.alpha / dl2.alpha - inst.q * inst.q) < 1e-13);
    CHECK(std::abs(dl3.beta / dl2.beta - 1.0 / (inst.q * inst.q)) < 1e-13);
    // gamma at u=1 agrees with the closed form
    cd g = dr.alpha * std::pow(inst.q, -5) - dr.beta * std::pow(inst.q, 5);
    CHECK(std::abs(dr.gamma(inst.q, 5) - g) < 1e-13);
}
