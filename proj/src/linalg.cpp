#include "xxz/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace xxz {

CMat CMat::identity(int n) {
    CMat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

CMat CMat::diag(const std::vector<cd>& d) {
    CMat m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (size_t i = 0; i < d.size(); ++i) m(static_cast<int>(i), static_cast<int>(i)) = d[i];
    return m;
}

CMat CMat::operator+(const CMat& o) const {
    CMat r(rows, cols);
    for (size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] + o.a[i];
    return r;
}

CMat CMat::operator-(const CMat& o) const {
    CMat r(rows, cols);
    for (size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] - o.a[i];
    return r;
}

CMat CMat::operator*(const CMat& o) const {
    if (cols != o.rows) throw std::invalid_argument("CMat multiply: shape mismatch");
    CMat r(rows, o.cols);
    for (int i = 0; i < rows; ++i) {
        for (int k = 0; k < cols; ++k) {
            cd aik = (*this)(i, k);
            if (aik == cd(0)) continue;
            const cd* orow = &o.a[static_cast<size_t>(k) * o.cols];
            cd* rrow = &r.a[static_cast<size_t>(i) * o.cols];
            for (int j = 0; j < o.cols; ++j) rrow[j] += aik * orow[j];
        }
    }
    return r;
}

CMat CMat::operator*(cd s) const {
    CMat r(rows, cols);
    for (size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] * s;
    return r;
}

std::vector<cd> CMat::operator*(const std::vector<cd>& x) const {
    if (static_cast<int>(x.size()) != cols) throw std::invalid_argument("CMat apply: shape mismatch");
    std::vector<cd> y(rows);
    for (int i = 0; i < rows; ++i) {
        cd s = 0;
        const cd* row = &a[static_cast<size_t>(i) * cols];
        for (int j = 0; j < cols; ++j) s += row[j] * x[j];
        y[i] = s;
    }
    return y;
}

CMat CMat::transpose() const {
    CMat r(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) r(j, i) = (*this)(i, j);
    return r;
}

cd CMat::trace() const {
    cd s = 0;
    for (int i = 0; i < std::min(rows, cols); ++i) s += (*this)(i, i);
    return s;
}

double CMat::fnorm() const {
    double s = 0;
    for (const cd& z : a) s += std::norm(z);
    return std::sqrt(s);
}

CMat kron(const CMat& x, const CMat& y) {
    long total = static_cast<long>(x.rows) * y.rows;
    if (total > (1L << 12)) throw std::length_error("kron: dimension beyond 2^12");
    CMat r(x.rows * y.rows, x.cols * y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) {
            cd xij = x(i, j);
            if (xij == cd(0)) continue;
            for (int k = 0; k < y.rows; ++k)
                for (int l = 0; l < y.cols; ++l)
                    r(i * y.rows + k, j * y.cols + l) = xij * y(k, l);
        }
    return r;
}

cd determinant(const CMat& m) {
    if (m.rows != m.cols) throw std::invalid_argument("determinant: non-square");
    int n = m.rows;
    CMat lu = m;
    cd det = 1.0;
    for (int k = 0; k < n; ++k) {
        int p = k;
        double best = std::abs(lu(k, k));
        for (int i = k + 1; i < n; ++i)
            if (std::abs(lu(i, k)) > best) { best = std::abs(lu(i, k)); p = i; }
        if (best == 0.0) return 0.0;
        if (p != k) {
            for (int j = 0; j < n; ++j) std::swap(lu(p, j), lu(k, j));
            det = -det;
        }
        det *= lu(k, k);
        for (int i = k + 1; i < n; ++i) {
            cd f = lu(i, k) / lu(k, k);
            for (int j = k; j < n; ++j) lu(i, j) -= f * lu(k, j);
        }
    }
    return det;
}

std::vector<cd> solve(const CMat& m, const std::vector<cd>& b) {
    if (m.rows != m.cols) throw std::invalid_argument("solve: non-square");
    int n = m.rows;
    CMat lu = m;
    std::vector<cd> x = b;
    for (int k = 0; k < n; ++k) {
        int p = k;
        double best = std::abs(lu(k, k));
        for (int i = k + 1; i < n; ++i)
            if (std::abs(lu(i, k)) > best) { best = std::abs(lu(i, k)); p = i; }
        if (best < 1e-300) throw std::runtime_error("solve: singular matrix");
        if (p != k) {
            for (int j = 0; j < n; ++j) std::swap(lu(p, j), lu(k, j));
            std::swap(x[p], x[k]);
        }
        for (int i = k + 1; i < n; ++i) {
            cd f = lu(i, k) / lu(k, k);
            lu(i, k) = 0;
            for (int j = k + 1; j < n; ++j) lu(i, j) -= f * lu(k, j);
            x[i] -= f * x[k];
        }
    }
    for (int i = n - 1; i >= 0; --i) {
        cd s = x[i];
        for (int j = i + 1; j < n; ++j) s -= lu(i, j) * x[j];
        x[i] = s / lu(i, i);
    }
    return x;
}

std::vector<cd> lstsq(const CMat& m, const std::vector<cd>& b) {
    int rows = m.rows, cols = m.cols;
    if (rows < cols) throw std::invalid_argument("lstsq: underdetermined");
    CMat r = m;
    std::vector<cd> y = b;
    // Householder QR, applying reflectors to the rhs as we go
    for (int k = 0; k < cols; ++k) {
        double xnorm = 0;
        for (int i = k; i < rows; ++i) xnorm += std::norm(r(i, k));
        xnorm = std::sqrt(xnorm);
        if (xnorm < 1e-300) throw std::runtime_error("lstsq: rank deficient column");
        cd akk = r(k, k);
        cd phase = (std::abs(akk) > 0) ? akk / std::abs(akk) : cd(1);
        cd alpha = -phase * xnorm;
        std::vector<cd> v(rows - k);
        v[0] = akk - alpha;
        for (int i = k + 1; i < rows; ++i) v[i - k] = r(i, k);
        double vn2 = 0;
        for (const cd& z : v) vn2 += std::norm(z);
        if (vn2 < 1e-300) continue;
        for (int j = k; j < cols; ++j) {
            cd s = 0;
            for (int i = k; i < rows; ++i) s += std::conj(v[i - k]) * r(i, j);
            s *= 2.0 / vn2;
            for (int i = k; i < rows; ++i) r(i, j) -= s * v[i - k];
        }
        cd s = 0;
        for (int i = k; i < rows; ++i) s += std::conj(v[i - k]) * y[i];
        s *= 2.0 / vn2;
        for (int i = k; i < rows; ++i) y[i] -= s * v[i - k];
    }
    std::vector<cd> x(cols);
    for (int i = cols - 1; i >= 0; --i) {
        cd s = y[i];
        for (int j = i + 1; j < cols; ++j) s -= r(i, j) * x[j];
        x[i] = s / r(i, i);
    }
    return x;
}

namespace {

// Reduce to upper Hessenberg form, accumulating the similarity in q.
void hessenberg(CMat& h, CMat& q) {
    int n = h.rows;
    q = CMat::identity(n);
    for (int k = 0; k < n - 2; ++k) {
        double xnorm = 0;
        for (int i = k + 1; i < n; ++i) xnorm += std::norm(h(i, k));
        xnorm = std::sqrt(xnorm);
        if (xnorm < 1e-300) continue;
        cd x0 = h(k + 1, k);
        cd phase = (std::abs(x0) > 0) ? x0 / std::abs(x0) : cd(1);
        cd alpha = -phase * xnorm;
        std::vector<cd> v(n - k - 1);
        v[0] = x0 - alpha;
        for (int i = k + 2; i < n; ++i) v[i - k - 1] = h(i, k);
        double vn2 = 0;
        for (const cd& z : v) vn2 += std::norm(z);
        if (vn2 < 1e-300) continue;
        // H <- P H P with P = I - 2 v v* / |v|^2 acting on rows/cols k+1..n-1
        for (int j = 0; j < n; ++j) {
            cd s = 0;
            for (int i = k + 1; i < n; ++i) s += std::conj(v[i - k - 1]) * h(i, j);
            s *= 2.0 / vn2;
            for (int i = k + 1; i < n; ++i) h(i, j) -= s * v[i - k - 1];
        }
        for (int i = 0; i < n; ++i) {
            cd s = 0;
            for (int j = k + 1; j < n; ++j) s += h(i, j) * v[j - k - 1];
            s *= 2.0 / vn2;
            for (int j = k + 1; j < n; ++j) h(i, j) -= s * std::conj(v[j - k - 1]);
        }
        for (int i = 0; i < n; ++i) {
            cd s = 0;
            for (int j = k + 1; j < n; ++j) s += q(i, j) * v[j - k - 1];
            s *= 2.0 / vn2;
            for (int j = k + 1; j < n; ++j) q(i, j) -= s * std::conj(v[j - k - 1]);
        }
    }
}

cd wilkinson_shift(const CMat& h, int m) {
    // eigenvalue of the trailing 2x2 block closest to h(m,m)
    cd a = h(m - 1, m - 1), b = h(m - 1, m), c = h(m, m - 1), d = h(m, m);
    cd tr = a + d, det = a * d - b * c;
    cd disc = std::sqrt(tr * tr - 4.0 * det);
    cd l1 = (tr + disc) / 2.0, l2 = (tr - disc) / 2.0;
    return (std::abs(l1 - d) < std::abs(l2 - d)) ? l1 : l2;
}

// Shifted QR on the Hessenberg matrix using Givens rotations; q accumulates
// so that a_original = q t q^H on exit.
void schur_qr(CMat& h, CMat& q) {
    int n = h.rows;
    int hi = n - 1;
    long iters = 0;
    const long cap = 100L * n;
    while (hi > 0) {
        // deflate tiny subdiagonals
        int lo = hi;
        while (lo > 0) {
            double off = std::abs(h(lo, lo - 1));
            double scale = std::abs(h(lo, lo)) + std::abs(h(lo - 1, lo - 1));
            if (off <= 1e-15 * (scale > 0 ? scale : 1.0)) { h(lo, lo - 1) = 0; break; }
            --lo;
        }
        if (lo == hi) { --hi; continue; }
        if (++iters > cap)
            throw std::runtime_error("eigenpairs: QR did not converge after " + std::to_string(iters) + " iterations");
        cd shift = wilkinson_shift(h, hi);
        // implicit single-shift sweep on rows lo..hi via explicit Givens
        for (int k = lo; k < hi; ++k) {
            cd x = (k == lo) ? h(lo, lo) - shift : h(k, k - 1);
            cd y = (k == lo) ? h(lo + 1, lo) : h(k + 1, k - 1);
            double r = std::sqrt(std::norm(x) + std::norm(y));
            if (r < 1e-300) continue;
            cd cs = x / r, sn = y / r;
            // rows
            for (int j = std::max(0, k - 1); j < n; ++j) {
                cd t1 = h(k, j), t2 = h(k + 1, j);
                h(k, j) = std::conj(cs) * t1 + std::conj(sn) * t2;
                h(k + 1, j) = -sn * t1 + cs * t2;
            }
            // cols
            int top = std::min(hi, k + 2);
            for (int i = 0; i <= top; ++i) {
                cd t1 = h(i, k), t2 = h(i, k + 1);
                h(i, k) = t1 * cs + t2 * sn;
                h(i, k + 1) = -t1 * std::conj(sn) + t2 * std::conj(cs);
            }
            for (int i = 0; i < n; ++i) {
                cd t1 = q(i, k), t2 = q(i, k + 1);
                q(i, k) = t1 * cs + t2 * sn;
                q(i, k + 1) = -t1 * std::conj(sn) + t2 * std::conj(cs);
            }
        }
    }
}

} // namespace

std::vector<EigenPair> eigenpairs(const CMat& m) {
    if (m.rows != m.cols) throw std::invalid_argument("eigenpairs: non-square");
    if (m.rows > 256) throw std::invalid_argument("eigenpairs: dimension beyond 2^8");
    int n = m.rows;
    CMat t = m, q;
    hessenberg(t, q);
    schur_qr(t, q);
    double tnorm = t.fnorm();
    std::vector<EigenPair> out(n);
    for (int k = 0; k < n; ++k) {
        cd lam = t(k, k);
        // solve (T - lam I) y = 0 with y[k] = 1, y[j>k] = 0 (T upper triangular)
        std::vector<cd> y(n, 0.0);
        y[k] = 1.0;
        for (int i = k - 1; i >= 0; --i) {
            cd s = 0;
            for (int j = i + 1; j <= k; ++j) s += t(i, j) * y[j];
            cd dia = t(i, i) - lam;
            if (std::abs(dia) < 1e-13 * (tnorm > 0 ? tnorm : 1.0))
                dia = cd(1e-13 * (tnorm > 0 ? tnorm : 1.0));
            y[i] = -s / dia;
        }
        std::vector<cd> v = q * y;
        double nv = vec_norm(v);
        for (cd& z : v) z /= nv;
        out[k] = {lam, std::move(v)};
    }
    return out;
}

std::vector<cd> poly_roots(const std::vector<cd>& c) {
    std::vector<cd> cc = c;
    while (cc.size() > 1 && std::abs(cc.back()) < 1e-300) cc.pop_back();
    int n = static_cast<int>(cc.size()) - 1;
    if (n < 1) return {};
    CMat comp(n, n);
    for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) comp(i, n - 1) = -cc[i] / cc[n];
    auto ep = eigenpairs(comp);
    std::vector<cd> roots(n);
    for (int i = 0; i < n; ++i) roots[i] = ep[i].value;
    return roots;
}

UPoly fit_poly(const std::vector<cd>& xs, const std::vector<cd>& ys, int degree) {
    int npts = static_cast<int>(xs.size());
    if (npts < degree + 1) throw std::invalid_argument("fit_poly: not enough points");
    for (int i = 0; i < npts; ++i)
        for (int j = i + 1; j < npts; ++j)
            if (std::abs(xs[i] - xs[j]) < 1e-12)
                throw std::runtime_error("fit_poly: coincident abscissae");
    CMat vand(npts, degree + 1);
    for (int i = 0; i < npts; ++i) {
        cd p = 1.0;
        for (int k = 0; k <= degree; ++k) { vand(i, k) = p; p *= xs[i]; }
    }
    UPoly out;
    out.c = (npts == degree + 1) ? solve(vand, ys) : lstsq(vand, ys);
    return out;
}

double vec_norm(const std::vector<cd>& x) {
    double s = 0;
    for (const cd& z : x) s += std::norm(z);
    return std::sqrt(s);
}

std::vector<cd> vec_sub(const std::vector<cd>& x, const std::vector<cd>& y) {
    std::vector<cd> r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = x[i] - y[i];
    return r;
}

std::vector<cd> vec_add(const std::vector<cd>& x, const std::vector<cd>& y) {
    std::vector<cd> r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
    return r;
}

std::vector<cd> vec_scale(cd s, const std::vector<cd>& x) {
    std::vector<cd> r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = s * x[i];
    return r;
}

cd vec_dot(const std::vector<cd>& x, const std::vector<cd>& y) {
    cd s = 0;
    for (size_t i = 0; i < x.size(); ++i) s += std::conj(x[i]) * y[i];
    return s;
}

double rel_resid(const CMat& lhs, const CMat& rhs) {
    return (lhs - rhs).fnorm() / (lhs.fnorm() + rhs.fnorm() + 1.0);
}

double rel_resid(const std::vector<cd>& lhs, const std::vector<cd>& rhs) {
    return vec_norm(vec_sub(lhs, rhs)) / (vec_norm(lhs) + vec_norm(rhs) + 1.0);
}

double rel_resid(cd lhs, cd rhs) {
    return std::abs(lhs - rhs) / (std::abs(lhs) + std::abs(rhs) + 1.0);
}

} // namespace xxz
