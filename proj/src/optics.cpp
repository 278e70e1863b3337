#include "biphoton/optics.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace biphoton {

namespace {

constexpr double kArgZeroTol = 1e-13;  // entries below this carry no argument

/// Reduce to (-pi, pi].
double wrap_phase(double a) {
    a = std::remainder(a, 2.0 * M_PI);
    if (a <= -M_PI) a = M_PI;
    return a;
}

} // namespace

UnitaryFactorization factorize_unitary(const ComplexMatrix2& u) {
    const double dev = max_abs_diff(u.adjoint() * u, ComplexMatrix2::identity());
    if (!(dev <= 1e-10)) {
        std::ostringstream msg;
        msg << "factorize_unitary: input not unitary, max|u†u - I| = " << dev;
        throw std::invalid_argument(msg.str());
    }

    UnitaryFactorization f;
    const double c = std::abs(u(0, 0));
    const double s = std::abs(u(0, 1));
    f.theta = std::atan2(s, c);

    if (s <= kArgZeroTol) {
        // Diagonal: beta and gamma belong to vanished entries; beta
        // defaults to 0 and gamma absorbs the second diagonal argument.
        f.alpha = wrap_phase(std::arg(u(0, 0)));
        f.beta = 0.0;
        f.gamma = wrap_phase(std::arg(u(1, 1)) + f.alpha - f.beta);
    } else if (c <= kArgZeroTol) {
        // Antidiagonal: alpha belongs to a vanished entry.
        f.alpha = 0.0;
        f.beta = wrap_phase(std::arg(u(0, 1)));
        f.gamma = wrap_phase(std::arg(-u(1, 0)));
    } else {
        f.alpha = wrap_phase(std::arg(u(0, 0)));
        f.beta = wrap_phase(std::arg(u(0, 1)));
        f.gamma = wrap_phase(std::arg(-u(1, 0)));
    }
    return f;
}

ComplexMatrix2 reassemble(const UnitaryFactorization& f) {
    const double c = std::cos(f.theta);
    const double s = std::sin(f.theta);
    ComplexMatrix2 u;
    u(0, 0) = std::polar(c, f.alpha);
    u(0, 1) = std::polar(s, f.beta);
    u(1, 0) = -std::polar(s, f.gamma);
    u(1, 1) = std::polar(c, f.beta + f.gamma - f.alpha);
    return u;
}

ElementSequence synthesize_sequence(const UnitaryFactorization& f) {
    ElementSequence seq;
    seq.elements = {OpticalElement::phase_plate(wrap_phase(f.alpha - f.beta)),
                    OpticalElement::rotator(f.theta),
                    OpticalElement::phase_plate(wrap_phase(f.alpha - f.gamma))};
    seq.global_phase = wrap_phase(f.alpha);
    return seq;
}

ElementSequence waveplate_realization(const UnitaryFactorization& f) {
    // diag(1, e^{-id}) R(t) = diag(1, e^{-i(d+pi)}) HWP(t/2), so the rotator
    // trades for a half-wave plate against a pi shift of the exit delay.
    ElementSequence seq;
    seq.elements = {OpticalElement::phase_plate(wrap_phase(f.alpha - f.beta)),
                    OpticalElement::half_wave_plate(f.theta / 2.0),
                    OpticalElement::phase_plate(wrap_phase(f.alpha - f.gamma + M_PI))};
    seq.global_phase = wrap_phase(f.alpha);
    return seq;
}

ComplexMatrix2 element_jones(const OpticalElement& e) {
    ComplexMatrix2 j;
    switch (e.kind) {
        case OpticalElement::Kind::PhasePlate:
            j = ComplexMatrix2::diagonal(1.0, std::polar(1.0, -e.angle));
            break;
        case OpticalElement::Kind::Rotator: {
            const double c = std::cos(e.angle);
            const double s = std::sin(e.angle);
            j(0, 0) = c;
            j(0, 1) = s;
            j(1, 0) = -s;
            j(1, 1) = c;
            break;
        }
        case OpticalElement::Kind::HalfWavePlate: {
            const double c = std::cos(2.0 * e.angle);
            const double s = std::sin(2.0 * e.angle);
            j(0, 0) = c;
            j(0, 1) = s;
            j(1, 0) = s;
            j(1, 1) = -c;
            break;
        }
        case OpticalElement::Kind::QuarterWavePlate: {
            // R(-a) diag(1, -i) R(a)
            const double c = std::cos(e.angle);
            const double s = std::sin(e.angle);
            const cxd i{0.0, 1.0};
            j(0, 0) = c * c - i * s * s;
            j(0, 1) = (1.0 + i) * s * c;
            j(1, 0) = (1.0 + i) * s * c;
            j(1, 1) = s * s - i * c * c;
            break;
        }
    }
    return j;
}

ComplexMatrix2 realized_unitary(const ElementSequence& s) {
    ComplexMatrix2 p = ComplexMatrix2::identity();
    for (const OpticalElement& e : s.elements) p = element_jones(e) * p;
    return std::polar(1.0, s.global_phase) * p;
}

double seed_from_pump(const PumpSetting& p) {
    if (!(p.theta_p >= 0.0 && p.theta_p <= M_PI / 4.0))
        throw std::invalid_argument("seed_from_pump: theta_p outside [0, pi/4]");
    const double c = std::cos(2.0 * p.theta_p);
    if (p.branch == PumpBranch::LowerHH) return c / std::sqrt(1.0 + c * c);
    return 1.0 / std::sqrt(1.0 + c * c);
}

PumpSetting pump_for_seed(double x) {
    if (!(x >= 0.0 && x <= 1.0))
        throw std::invalid_argument("pump_for_seed: x outside [0, 1]");
    PumpSetting p;
    const double y = std::sqrt(std::max(0.0, 1.0 - x * x));
    if (x < M_SQRT1_2) {
        p.branch = PumpBranch::LowerHH;
        p.theta_p = 0.5 * std::acos(std::min(1.0, x / y));
    } else {
        p.branch = PumpBranch::LowerVV;
        p.theta_p = 0.5 * std::acos(std::min(1.0, y / x));
    }
    return p;
}

} // namespace biphoton
