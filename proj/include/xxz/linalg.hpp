#pragma once
// Dense complex linear algebra for small (<= 2^12) operator problems.
// Everything is double-precision std::complex, row-major storage.

#include <complex>
#include <vector>
#include <stdexcept>
#include <string>

namespace xxz {

using cd = std::complex<double>;

struct CMat {
    int rows = 0, cols = 0;
    std::vector<cd> a;

    CMat() = default;
    CMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    cd& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const cd& operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static CMat identity(int n);
    static CMat diag(const std::vector<cd>& d);

    CMat operator+(const CMat& o) const;
    CMat operator-(const CMat& o) const;
    CMat operator*(const CMat& o) const;
    CMat operator*(cd s) const;
    std::vector<cd> operator*(const std::vector<cd>& x) const;

    CMat transpose() const;
    cd trace() const;
    double fnorm() const;
};

inline CMat operator*(cd s, const CMat& m) { return m * s; }

// Kronecker (tensor) product, first factor is the slow index.
CMat kron(const CMat& x, const CMat& y);

// Determinant via partially pivoted LU.
cd determinant(const CMat& m);

// Solve m x = b for square m (LU with partial pivoting).
std::vector<cd> solve(const CMat& m, const std::vector<cd>& b);

// Least-squares solve via Householder QR, rows >= cols.
std::vector<cd> lstsq(const CMat& m, const std::vector<cd>& b);

struct EigenPair {
    cd value;
    std::vector<cd> vector; // unit norm
};

// Hessenberg reduction followed by Wilkinson-shifted QR with deflation.
// Eigenvectors from back-substitution on the Schur form. Throws on
// non-convergence (cap 100*dim iterations).
std::vector<EigenPair> eigenpairs(const CMat& m);

// Roots of a polynomial sum_k c[k] x^k (c.back() != 0) via the companion matrix.
std::vector<cd> poly_roots(const std::vector<cd>& c);

// Polynomial with complex coefficients in some scalar variable; used for
// eigenvalue branches expressed in the crossing-invariant variable.
struct UPoly {
    std::vector<cd> c; // c[k] multiplies x^k

    cd eval(cd x) const {
        cd r = 0;
        for (size_t k = c.size(); k-- > 0;) r = r * x + c[k];
        return r;
    }
    int degree() const { return static_cast<int>(c.size()) - 1; }
};

// Fit a degree-d polynomial through (x_i, y_i); exact if #points == d+1,
// least squares otherwise. Throws if abscissae nearly coincide.
UPoly fit_poly(const std::vector<cd>& xs, const std::vector<cd>& ys, int degree);

double vec_norm(const std::vector<cd>& x);
std::vector<cd> vec_sub(const std::vector<cd>& x, const std::vector<cd>& y);
std::vector<cd> vec_scale(cd s, const std::vector<cd>& x);
std::vector<cd> vec_add(const std::vector<cd>& x, const std::vector<cd>& y);
cd vec_dot(const std::vector<cd>& x, const std::vector<cd>& y); // conj(x).y

// Symmetric relative residual |lhs-rhs| / (|lhs|+|rhs|+1).
double rel_resid(const CMat& lhs, const CMat& rhs);
double rel_resid(const std::vector<cd>& lhs, const std::vector<cd>& rhs);
double rel_resid(cd lhs, cd rhs);

} // namespace xxz
