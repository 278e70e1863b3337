#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "biphoton/qmath.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace biphoton;

namespace {

const double kSqrt2 = std::sqrt(2.0);
const double kSqrt6 = std::sqrt(6.0);

ComplexMatrix2 xi_zero_matrix() {
    // (1/sqrt3) [[1, 1/sqrt2], [1/sqrt2, 1]]
    const double s3 = 1.0 / std::sqrt(3.0);
    ComplexMatrix2 a;
    a(0, 0) = s3;
    a(0, 1) = s3 / kSqrt2;
    a(1, 0) = s3 / kSqrt2;
    a(1, 1) = s3;
    return a;
}

ComplexMatrix2 hadamard_like() {
    ComplexMatrix2 u;
    u(0, 0) = u(0, 1) = u(1, 0) = 1.0 / kSqrt2;
    u(1, 1) = -1.0 / kSqrt2;
    return u;
}

double reconstruction_error(const ComplexMatrix2& a, const Svd2Result& r) {
    const ComplexMatrix2 rec =
        r.u * ComplexMatrix2::diagonal(r.d1, r.d2) * r.w.transpose();
    return max_abs_diff(rec, a);
}

} // namespace

TEST_CASE("svd2: identity") {
    const Svd2Result r = svd2(ComplexMatrix2::identity());
    CHECK(r.d1 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.d2 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(max_abs_diff(r.u, ComplexMatrix2::identity()) <= 1e-12);
    CHECK(max_abs_diff(r.w, ComplexMatrix2::identity()) <= 1e-12);
}

TEST_CASE("svd2: xi matrix at zero phases") {
    const ComplexMatrix2 a = xi_zero_matrix();
    const Svd2Result r = svd2(a);
    CHECK(std::abs(r.d1 - (kSqrt2 + 1.0) / kSqrt6) <= 1e-12);
    CHECK(std::abs(r.d2 - (kSqrt2 - 1.0) / kSqrt6) <= 1e-12);
    // three-decimal reference values
    CHECK(std::abs(r.d1 - 0.986) <= 5e-4);
    CHECK(std::abs(r.d2 - 0.169) <= 5e-4);
    CHECK(reconstruction_error(a, r) <= 1e-12);
}

TEST_CASE("svd2: real diagonal with ascending entries") {
    const ComplexMatrix2 a = ComplexMatrix2::diagonal(0.6, 0.8);
    // Oracle: eigenvalues of a†a from the expanded characteristic polynomial.
    const auto [s1, s2] = oracles::singular_values(a);
    CHECK(s1 == doctest::Approx(0.8).epsilon(1e-14));
    CHECK(s2 == doctest::Approx(0.6).epsilon(1e-14));

    const Svd2Result r = svd2(a);
    CHECK(std::abs(r.d1 - 0.8) <= 1e-12);
    CHECK(std::abs(r.d2 - 0.6) <= 1e-12);
    // Permutation-type factors.
    CHECK(std::abs(r.u(0, 1) - 1.0) <= 1e-12);
    CHECK(std::abs(r.u(1, 0) - 1.0) <= 1e-12);
    CHECK(std::abs(r.w(0, 1) - 1.0) <= 1e-12);
    CHECK(std::abs(r.w(1, 0) - 1.0) <= 1e-12);
    CHECK(reconstruction_error(a, r) <= 1e-12);
}

TEST_CASE("svd2: rank-1 and zero matrices stay deterministic") {
    ComplexMatrix2 rank1;
    rank1(0, 0) = 1.0;
    const Svd2Result r = svd2(rank1);
    CHECK(std::abs(r.d1 - 1.0) <= 1e-12);
    CHECK(r.d2 <= 1e-13);
    CHECK(max_abs_diff(r.u, ComplexMatrix2::identity()) <= 1e-12);
    CHECK(max_abs_diff(r.w, ComplexMatrix2::identity()) <= 1e-12);

    const Svd2Result z = svd2(ComplexMatrix2{});
    CHECK(z.d1 == 0.0);
    CHECK(z.d2 == 0.0);
    CHECK(max_abs_diff(z.u, ComplexMatrix2::identity()) == 0.0);
    CHECK(max_abs_diff(z.w, ComplexMatrix2::identity()) == 0.0);
}

TEST_CASE("svd2: non-finite input rejected") {
    ComplexMatrix2 bad;
    bad(0, 0) = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(svd2(bad), std::invalid_argument);
    bad(0, 0) = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(svd2(bad), std::invalid_argument);
}

TEST_CASE("is_unitary") {
    CHECK(is_unitary(ComplexMatrix2::identity(), 1e-12));
    CHECK(is_unitary(hadamard_like(), 1e-12));
    CHECK_FALSE(is_unitary(ComplexMatrix2::diagonal(1.0, 2.0), 1e-12));
}

TEST_CASE("tensor_apply: basics") {
    const FourVector v{0.5, {0.0, 0.5}, 0.5, {0.0, -0.5}};
    const ComplexMatrix2 id = ComplexMatrix2::identity();
    const FourVector r = tensor_apply(id, id, v);
    CHECK((r - v).norm() <= 1e-15);

    ComplexMatrix2 flip;  // sigma_x
    flip(0, 1) = flip(1, 0) = 1.0;
    const FourVector hh{1.0, 0.0, 0.0, 0.0};
    const FourVector vv = tensor_apply(flip, flip, hh);
    CHECK(std::abs(vv.beta - 1.0) <= 1e-15);
    CHECK(std::abs(vv.alpha) + std::abs(vv.gamma) + std::abs(vv.delta) <= 1e-15);
}

TEST_CASE("tensor_apply: seed through the first v-basis unitary") {
    const ComplexMatrix2 u = hadamard_like();
    const double x = (kSqrt2 + 1.0) / kSqrt6;
    const FourVector exact_seed{x, (kSqrt2 - 1.0) / kSqrt6, 0.0, 0.0};
    const double s3 = 1.0 / std::sqrt(3.0);
    const FourVector v1{s3, s3, s3 / kSqrt2, s3 / kSqrt2};

    const FourVector got = tensor_apply(u, u, exact_seed);
    CHECK((got - v1).norm() <= 1e-12);

    // The three-decimal seed only reaches that precision.
    const FourVector rounded_seed{0.986, 0.169, 0.0, 0.0};
    const FourVector approx = tensor_apply(u, u, rounded_seed);
    CHECK((approx - v1).norm() <= 1e-3);
}

TEST_CASE("schmidt_coefficients: named states") {
    const FourVector hh{1.0, 0.0, 0.0, 0.0};
    auto [p1, p2] = schmidt_coefficients(hh);
    CHECK(std::abs(p1 - 1.0) <= 1e-12);
    CHECK(std::abs(p2) <= 1e-12);

    const FourVector bell{1.0 / kSqrt2, 1.0 / kSqrt2, 0.0, 0.0};
    auto [b1, b2] = schmidt_coefficients(bell);
    CHECK(std::abs(b1 - 1.0 / kSqrt2) <= 1e-12);
    CHECK(std::abs(b2 - 1.0 / kSqrt2) <= 1e-12);

    const double s3 = 1.0 / std::sqrt(3.0);
    const FourVector v1{s3, s3, s3 / kSqrt2, s3 / kSqrt2};
    auto [c1, c2] = schmidt_coefficients(v1);
    CHECK(std::abs(c1 - (kSqrt2 + 1.0) / kSqrt6) <= 1e-12);
    CHECK(std::abs(c2 - (kSqrt2 - 1.0) / kSqrt6) <= 1e-12);

    const FourVector unnormalized{0.5, 0.0, 0.0, 0.0};
    CHECK_THROWS_AS(schmidt_coefficients(unnormalized), std::invalid_argument);
}

TEST_CASE("svd2 properties over random matrices") {
    std::mt19937 rng(20260809);
    for (int i = 0; i < 1000; ++i) {
        const ComplexMatrix2 a = oracles::random_unit_disc_matrix(rng);
        const Svd2Result r = svd2(a);
        CHECK(r.d1 >= r.d2);
        CHECK(r.d2 >= 0.0);
        CHECK(reconstruction_error(a, r) <= 1e-12);
        CHECK(is_unitary(r.u, 1e-12));
        CHECK(is_unitary(r.w, 1e-12));
        // Frobenius consistency: d1^2 + d2^2 = tr(a†a).
        const double tr = (a.adjoint() * a).trace().real();
        CHECK(std::abs(r.d1 * r.d1 + r.d2 * r.d2 - tr) <= 1e-12);
        // Against the characteristic-polynomial oracle.
        const auto [s1, s2] = oracles::singular_values(a);
        CHECK(std::abs(r.d1 - s1) <= 1e-10);
        CHECK(std::abs(r.d2 - s2) <= 1e-10);
    }
}

TEST_CASE("tensor_apply preserves norm under random unitaries") {
    std::mt19937 rng(7041);
    for (int i = 0; i < 200; ++i) {
        const ComplexMatrix2 u = oracles::random_unitary(rng);
        const ComplexMatrix2 w = oracles::random_unitary(rng);
        const FourVector v = oracles::random_state(rng);
        CHECK(std::abs(tensor_apply(u, w, v).norm2() - 1.0) <= 1e-12);
    }
}

TEST_CASE("schmidt_coefficients invariant under local unitaries") {
    std::mt19937 rng(515);
    for (int i = 0; i < 200; ++i) {
        const FourVector v = oracles::random_state(rng);
        const ComplexMatrix2 u = oracles::random_unitary(rng);
        const ComplexMatrix2 w = oracles::random_unitary(rng);
        const auto [a1, a2] = schmidt_coefficients(v);
        const auto [b1, b2] =
            schmidt_coefficients(tensor_apply(u, w, v).normalized());
        CHECK(std::abs(a1 - b1) <= 1e-12);
        CHECK(std::abs(a2 - b2) <= 1e-12);
    }
}
