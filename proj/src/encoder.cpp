#include "biphoton/encoder.hpp"

#include <cmath>
#include <stdexcept>

namespace biphoton {

namespace {

constexpr double kZeroTol = 1e-12;

const double kSqrt2 = std::sqrt(2.0);
const double kSqrt3 = std::sqrt(3.0);

} // namespace

TwoQubitState canonicalize(const TwoQubitState& s) {
    for (const cxd& amp : {s.alpha, s.beta, s.gamma, s.delta}) {
        if (std::abs(amp) > kZeroTol) {
            return (std::conj(amp) / std::abs(amp)) * s;
        }
    }
    throw std::invalid_argument("canonicalize: zero vector");
}

TwoQubitState qutrit_embed(const QutritState& q) {
    const cxd half = q.c2 / kSqrt2;
    return {q.c0, q.c1, half, half};
}

ComplexMatrix2 state_to_matrix(const TwoQubitState& s) {
    ComplexMatrix2 m;
    m(0, 0) = s.alpha;
    m(1, 1) = s.beta;
    m(0, 1) = s.gamma;
    m(1, 0) = s.delta;
    return m;
}

TwoQubitState state_from_matrix(const ComplexMatrix2& m) {
    return {m(0, 0), m(1, 1), m(0, 1), m(1, 0)};
}

TwoQubitState seed_state(double x) {
    if (x < 0.0 || x > 1.0) throw std::invalid_argument("seed_state: x outside [0,1]");
    return {x, std::sqrt(std::max(0.0, 1.0 - x * x)), 0.0, 0.0};
}

EncodingPlan encode(const TwoQubitState& s) {
    const TwoQubitState fixed = canonicalize(s);
    const Svd2Result r = svd2(state_to_matrix(fixed));
    return {r.d1, r.u, r.w};
}

TwoQubitState apply_plan(const EncodingPlan& p) {
    return tensor_apply(p.u, p.w, seed_state(p.x));
}

double fidelity(const TwoQubitState& a, const TwoQubitState& b) {
    return std::norm(inner(a, b));
}

ComplexMatrix2 xi_matrix(double psi, double phi) {
    const cxd off = std::polar(1.0 / (kSqrt3 * kSqrt2), phi);
    ComplexMatrix2 m;
    m(0, 0) = 1.0 / kSqrt3;
    m(0, 1) = off;
    m(1, 0) = off;
    m(1, 1) = std::polar(1.0 / kSqrt3, psi);
    return m;
}

XiDecomposition xi_closed_form(double psi, double phi) {
    const double half = 1.0 / kSqrt2;

    XiDecomposition r;
    r.u(0, 0) = std::polar(half, std::arg(kSqrt2 + std::polar(1.0, phi - psi / 2.0)));
    r.u(0, 1) = std::polar(half, std::arg(kSqrt2 - std::polar(1.0, phi - psi / 2.0)));
    r.u(1, 0) = std::polar(
        half, std::arg(std::polar(1.0, phi) + kSqrt2 * std::polar(1.0, psi / 2.0)));
    r.u(1, 1) = std::polar(
        half, std::arg(std::polar(1.0, phi) - kSqrt2 * std::polar(1.0, psi / 2.0)));

    r.w(0, 0) = half;
    r.w(0, 1) = half;
    r.w(1, 0) = std::polar(half, psi / 2.0);
    r.w(1, 1) = -std::polar(half, psi / 2.0);

    const double c = (kSqrt2 / 3.0) * std::cos(psi / 2.0 - phi);
    r.d1 = std::sqrt(0.5 + c);
    r.d2 = std::sqrt(0.5 - c);
    return r;
}

} // namespace biphoton
