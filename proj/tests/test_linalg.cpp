#include <doctest.h>

#include "xxz/linalg.hpp"

#include <random>

using namespace xxz;

namespace {
CMat random_mat(int n, unsigned seed) {
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    CMat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = cd(d(gen), d(gen));
    return m;
}
} // namespace

TEST_CASE("kron identities") {
    CMat a = random_mat(2, 1), b = random_mat(3, 2);
    CMat c = random_mat(2, 3), d = random_mat(3, 4);
    CHECK(rel_resid(kron(CMat::identity(2), CMat::identity(4)), CMat::identity(8)) < 1e-15);
    // mixed-product rule
    CHECK(rel_resid(kron(a, b) * kron(c, d), kron(a * c, b * d)) < 1e-14);
}

TEST_CASE("determinant equals eigenvalue product") {
    CMat m = random_mat(5, 7);
    cd det = determinant(m);
    cd prod = 1.0;
    cd tr = 0.0, trsum = 0.0;
    for (const auto& ep : eigenpairs(m)) {
        prod *= ep.value;
        trsum += ep.value;
    }
    for (int i = 0; i < 5; ++i) tr += m(i, i);
    CHECK(std::abs(det - prod) / std::abs(det) < 1e-11);
    CHECK(std::abs(tr - trsum) / std::abs(tr) < 1e-12);
}

TEST_CASE("eigenpairs satisfy the eigen equation") {
    CMat m = random_mat(6, 3);
    for (const auto& ep : eigenpairs(m)) {
        std::vector<cd> mv = m * ep.vector;
        CHECK(rel_resid(mv, vec_scale(ep.value, ep.vector)) < 1e-11);
    }
}

TEST_CASE("solve and lstsq") {
    CMat a = random_mat(4, 11);
    std::vector<cd> x0{1.0, cd(0, 2), -3.0, cd(0.5, -0.5)};
    std::vector<cd> b = a * x0;
    CHECK(rel_resid(solve(a, b), x0) < 1e-12);

    // overdetermined but consistent system
    CMat tall(6, 3);
    std::mt19937_64 gen(5);
    std::uniform_real_distribution<double> dd(-1, 1);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 3; ++j) tall(i, j) = cd(dd(gen), dd(gen));
    std::vector<cd> y0{cd(1, 1), 2.0, cd(-1, 0.5)};
    CHECK(rel_resid(lstsq(tall, tall * y0), y0) < 1e-12);
}

TEST_CASE("polynomial roots and fitting") {
    // (x-1)(x-2i)(x+3) = x^3 + (2-2i) x^2 + (-3-4i) x + 6i
    std::vector<cd> c{cd(0, 6), cd(-3, -4), cd(2, -2), 1.0};
    auto roots = poly_roots(c);
    REQUIRE(roots.size() == 3);
    for (cd r : roots) {
        cd val = ((r + c[2]) * r + c[1]) * r + c[0];
        CHECK(std::abs(val) < 1e-10);
    }

    std::vector<cd> xs{0.0, 1.0, cd(0, 1), 2.0, cd(1, 1)};
    std::vector<cd> ys;
    for (cd x : xs) ys.push_back(((x + 1.0) * x - 2.0) * x + cd(0, 3));
    UPoly p = fit_poly(xs, ys, 3);
    cd probe(0.3, -0.7);
    CHECK(std::abs(p.eval(probe) - (((probe + 1.0) * probe - 2.0) * probe + cd(0, 3))) < 1e-10);

    std::vector<cd> bad{1.0, 1.0 + 1e-14, 2.0};
    CHECK_THROWS(fit_poly(bad, {1.0, 2.0, 3.0}, 2));
}
