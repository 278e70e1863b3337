#include "biphoton/qmath.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace biphoton {

namespace {

constexpr double kPhaseZeroTol = 1e-12;   // entries below this carry no phase
constexpr double kRankRatioTol = 1e-13;   // d2/d1 below this is rank <= 1

bool finite(cxd z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

using Column = std::array<cxd, 2>;

void set_col(ComplexMatrix2& a, int c, const Column& v) {
    a(0, c) = v[0];
    a(1, c) = v[1];
}

double col_norm(const Column& v) {
    return std::sqrt(std::norm(v[0]) + std::norm(v[1]));
}

Column col_scale(const Column& v, cxd s) { return {s * v[0], s * v[1]}; }

cxd col_inner(const Column& a, const Column& b) {
    return std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1];
}

Column mat_vec(const ComplexMatrix2& a, const Column& v) {
    return {a(0, 0) * v[0] + a(0, 1) * v[1], a(1, 0) * v[0] + a(1, 1) * v[1]};
}

/// Unit vector orthogonal to a unit vector.
Column orthogonal_complement(const Column& v) {
    return {-std::conj(v[1]), std::conj(v[0])};
}

/// Phase that makes the first entry of modulus > 1e-12 real positive.
cxd canonical_phase(const Column& v) {
    for (const cxd& e : v) {
        if (std::abs(e) > kPhaseZeroTol) return std::conj(e) / std::abs(e);
    }
    return cxd{1.0, 0.0};
}

/// Unit vector from the standard basis orthogonalized against a unit vector.
Column gram_schmidt_completion(const Column& w1) {
    const Column e1{cxd{1.0, 0.0}, cxd{0.0, 0.0}};
    const Column e2{cxd{0.0, 0.0}, cxd{1.0, 0.0}};
    Column r{e1[0] - col_inner(w1, e1) * w1[0], e1[1] - col_inner(w1, e1) * w1[1]};
    double n = col_norm(r);
    if (n * n < 0.5) {
        r = {e2[0] - col_inner(w1, e2) * w1[0], e2[1] - col_inner(w1, e2) * w1[1]};
        n = col_norm(r);
    }
    return col_scale(r, 1.0 / n);
}

} // namespace

ComplexMatrix2 ComplexMatrix2::identity() {
    return diagonal(cxd{1.0, 0.0}, cxd{1.0, 0.0});
}

ComplexMatrix2 ComplexMatrix2::diagonal(cxd d0, cxd d1) {
    ComplexMatrix2 a;
    a(0, 0) = d0;
    a(1, 1) = d1;
    return a;
}

ComplexMatrix2 ComplexMatrix2::adjoint() const {
    ComplexMatrix2 a;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) a(r, c) = std::conj(m[c][r]);
    return a;
}

ComplexMatrix2 ComplexMatrix2::transpose() const {
    ComplexMatrix2 a;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) a(r, c) = m[c][r];
    return a;
}

ComplexMatrix2 ComplexMatrix2::conjugate() const {
    ComplexMatrix2 a;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) a(r, c) = std::conj(m[r][c]);
    return a;
}

cxd ComplexMatrix2::trace() const { return m[0][0] + m[1][1]; }

cxd ComplexMatrix2::det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

bool ComplexMatrix2::is_finite() const {
    for (const auto& row : m)
        for (const cxd& e : row)
            if (!finite(e)) return false;
    return true;
}

ComplexMatrix2 operator*(const ComplexMatrix2& a, const ComplexMatrix2& b) {
    ComplexMatrix2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
    return r;
}

ComplexMatrix2 operator*(cxd s, const ComplexMatrix2& a) {
    ComplexMatrix2 r = a;
    for (auto& row : r.m)
        for (cxd& e : row) e *= s;
    return r;
}

ComplexMatrix2 operator+(const ComplexMatrix2& a, const ComplexMatrix2& b) {
    ComplexMatrix2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r(i, j) = a(i, j) + b(i, j);
    return r;
}

ComplexMatrix2 operator-(const ComplexMatrix2& a, const ComplexMatrix2& b) {
    ComplexMatrix2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r(i, j) = a(i, j) - b(i, j);
    return r;
}

double max_abs_diff(const ComplexMatrix2& a, const ComplexMatrix2& b) {
    double d = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) d = std::max(d, std::abs(a(i, j) - b(i, j)));
    return d;
}

double FourVector::norm2() const {
    return std::norm(alpha) + std::norm(beta) + std::norm(gamma) + std::norm(delta);
}

double FourVector::norm() const { return std::sqrt(norm2()); }

FourVector FourVector::normalized() const {
    const double n = norm();
    if (n == 0.0) throw std::invalid_argument("FourVector: cannot normalize zero vector");
    return (cxd{1.0 / n, 0.0}) * (*this);
}

bool FourVector::is_finite() const {
    return finite(alpha) && finite(beta) && finite(gamma) && finite(delta);
}

FourVector operator*(cxd s, const FourVector& v) {
    return {s * v.alpha, s * v.beta, s * v.gamma, s * v.delta};
}

FourVector operator-(const FourVector& a, const FourVector& b) {
    return {a.alpha - b.alpha, a.beta - b.beta, a.gamma - b.gamma, a.delta - b.delta};
}

cxd inner(const FourVector& a, const FourVector& b) {
    return std::conj(a.alpha) * b.alpha + std::conj(a.beta) * b.beta +
           std::conj(a.gamma) * b.gamma + std::conj(a.delta) * b.delta;
}

Svd2Result svd2(const ComplexMatrix2& a) {
    if (!a.is_finite()) throw std::invalid_argument("svd2: non-finite entries");

    // Right singular directions: eigenvectors of the Hermitian h = a†a.
    const ComplexMatrix2 h = a.adjoint() * a;
    const double h00 = h(0, 0).real();
    const double h11 = h(1, 1).real();
    const cxd h01 = h(0, 1);
    const double scale = std::max({h00, h11, std::abs(h01)});

    Column v1, v2;
    if (std::abs(h01) <= 1e-15 * scale || scale == 0.0) {
        // Numerically diagonal: eigenvectors from the standard basis,
        // ordered descending, ties toward the identity.
        if (h00 >= h11) {
            v1 = {cxd{1.0, 0.0}, cxd{0.0, 0.0}};
        } else {
            v1 = {cxd{0.0, 0.0}, cxd{1.0, 0.0}};
        }
    } else {
        const double half_tr = 0.5 * (h00 + h11);
        const double gap = std::hypot(h00 - h11, 2.0 * std::abs(h01));
        const double lambda1 = half_tr + 0.5 * gap;
        // Pick the better-conditioned eigenvector formula.
        if (h00 >= h11) {
            v1 = {cxd{lambda1 - h11, 0.0}, std::conj(h01)};
        } else {
            v1 = {h01, cxd{lambda1 - h00, 0.0}};
        }
        v1 = col_scale(v1, 1.0 / col_norm(v1));
    }
    v2 = orthogonal_complement(v1);

    const Column av1 = mat_vec(a, v1);
    double d1 = col_norm(av1);

    ComplexMatrix2 u = ComplexMatrix2::identity();
    ComplexMatrix2 w = ComplexMatrix2::identity();
    double d2 = 0.0;

    if (d1 == 0.0) {
        // Zero matrix: everything is free; identity factors.
        return {u, 0.0, 0.0, w};
    }

    Column u1 = col_scale(av1, 1.0 / d1);
    Column c = orthogonal_complement(u1);
    const cxd t = col_inner(c, mat_vec(a, v2));
    d2 = std::abs(t);

    Column u2, w1 = {std::conj(v1[0]), std::conj(v1[1])};
    Column w2;
    bool w2_free = false;
    if (d2 > kRankRatioTol * d1) {
        u2 = col_scale(c, t / d2);
        w2 = {std::conj(v2[0]), std::conj(v2[1])};
    } else {
        // Rank <= 1: second columns are unconstrained. Take the orthogonal
        // complement for u and complete w from the standard basis.
        u2 = c;
        w2_free = true;
    }

    if (d2 > d1) {
        std::swap(d1, d2);
        std::swap(u1, u2);
        std::swap(w1, w2);
    }

    // Phase canonicalization: leading entry of each u column real positive,
    // compensating phase into w. A free w column is instead pinned by
    // Gram-Schmidt after w1 settles.
    const cxd z1 = canonical_phase(u1);
    u1 = col_scale(u1, z1);
    w1 = col_scale(w1, std::conj(z1));
    const cxd z2 = canonical_phase(u2);
    u2 = col_scale(u2, z2);
    if (w2_free) {
        w2 = gram_schmidt_completion(w1);
    } else {
        w2 = col_scale(w2, std::conj(z2));
    }

    set_col(u, 0, u1);
    set_col(u, 1, u2);
    set_col(w, 0, w1);
    set_col(w, 1, w2);
    return {u, d1, d2, w};
}

bool is_unitary(const ComplexMatrix2& a, double tol) {
    return max_abs_diff(a.adjoint() * a, ComplexMatrix2::identity()) <= tol;
}

FourVector tensor_apply(const ComplexMatrix2& u, const ComplexMatrix2& w,
                        const FourVector& v) {
    // Expand over the standard index |ab>: v00 = alpha, v01 = gamma,
    // v10 = delta, v11 = beta.
    const cxd p0 = w(0, 0) * v.alpha + w(0, 1) * v.gamma;  // w row 0 on (v00, v01)
    const cxd p1 = w(1, 0) * v.alpha + w(1, 1) * v.gamma;
    const cxd q0 = w(0, 0) * v.delta + w(0, 1) * v.beta;   // w row 0 on (v10, v11)
    const cxd q1 = w(1, 0) * v.delta + w(1, 1) * v.beta;
    FourVector r;
    r.alpha = u(0, 0) * p0 + u(0, 1) * q0;  // |00>
    r.gamma = u(0, 0) * p1 + u(0, 1) * q1;  // |01>
    r.delta = u(1, 0) * p0 + u(1, 1) * q0;  // |10>
    r.beta = u(1, 0) * p1 + u(1, 1) * q1;   // |11>
    return r;
}

std::pair<double, double> schmidt_coefficients(const FourVector& v) {
    if (std::abs(v.norm2() - 1.0) > 1e-12)
        throw std::invalid_argument("schmidt_coefficients: state not normalized");
    ComplexMatrix2 m;
    m(0, 0) = v.alpha;
    m(1, 1) = v.beta;
    m(0, 1) = v.gamma;
    m(1, 0) = v.delta;
    const Svd2Result r = svd2(m);
    return {r.d1, r.d2};
}

} // namespace biphoton
