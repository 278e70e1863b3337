#pragma once

#include <array>
#include <complex>
#include <utility>

namespace biphoton {

using cxd = std::complex<double>;

/// 2x2 complex matrix, row-major, value semantics.
struct ComplexMatrix2 {
    std::array<std::array<cxd, 2>, 2> m{};

    static ComplexMatrix2 identity();
    static ComplexMatrix2 diagonal(cxd d0, cxd d1);

    cxd& operator()(int r, int c) { return m[r][c]; }
    const cxd& operator()(int r, int c) const { return m[r][c]; }

    ComplexMatrix2 adjoint() const;
    ComplexMatrix2 transpose() const;
    ComplexMatrix2 conjugate() const;
    cxd trace() const;
    cxd det() const;
    bool is_finite() const;
};

ComplexMatrix2 operator*(const ComplexMatrix2& a, const ComplexMatrix2& b);
ComplexMatrix2 operator*(cxd s, const ComplexMatrix2& a);
ComplexMatrix2 operator+(const ComplexMatrix2& a, const ComplexMatrix2& b);
ComplexMatrix2 operator-(const ComplexMatrix2& a, const ComplexMatrix2& b);

/// Largest entrywise |a - b|.
double max_abs_diff(const ComplexMatrix2& a, const ComplexMatrix2& b);

/// Two-qubit amplitudes stored in the (|00>, |11>, |01>, |10>) order,
/// i.e. the (alpha, beta, gamma, delta) roles. |0> = |H>, |1> = |V>.
struct FourVector {
    cxd alpha{}, beta{}, gamma{}, delta{};

    double norm2() const;
    double norm() const;
    FourVector normalized() const;
    bool is_finite() const;
};

FourVector operator*(cxd s, const FourVector& v);
FourVector operator-(const FourVector& a, const FourVector& b);

/// <a|b> with the physics convention (conjugate-linear in a).
cxd inner(const FourVector& a, const FourVector& b);

/// Decomposition a = u * diag(d1, d2) * transpose(w) with u, w unitary and
/// d1 >= d2 >= 0. Note the third factor is a plain transpose, not an
/// adjoint: w is the entrywise conjugate of the textbook right factor.
struct Svd2Result {
    ComplexMatrix2 u;
    double d1 = 0.0;
    double d2 = 0.0;
    ComplexMatrix2 w;
};

/// Closed-form 2x2 SVD in the transpose convention above. Deterministic
/// canonicalization: singular values descending; each column of u has its
/// first entry of modulus > 1e-12 made real positive, with the compensating
/// phase pushed into the matching column of w; at rank deficiency the free
/// column of w is completed by Gram-Schmidt from the standard basis, ties
/// toward the standard basis throughout. Throws std::invalid_argument on
/// non-finite input.
Svd2Result svd2(const ComplexMatrix2& a);

/// True iff max|a†a - I| <= tol.
bool is_unitary(const ComplexMatrix2& a, double tol);

/// (u ⊗ w) applied to v. Preserves the norm when u and w are unitary.
FourVector tensor_apply(const ComplexMatrix2& u, const ComplexMatrix2& w,
                        const FourVector& v);

/// Descending Schmidt pair (s1, s2), s1^2 + s2^2 = 1, of a normalized state:
/// the singular values of its amplitude matrix. Throws std::invalid_argument
/// if |norm^2 - 1| > 1e-12.
std::pair<double, double> schmidt_coefficients(const FourVector& v);

} // namespace biphoton
