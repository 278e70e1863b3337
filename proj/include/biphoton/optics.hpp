#pragma once

#include <vector>

#include "biphoton/qmath.hpp"

namespace biphoton {

/// Phase/rotation/phase parameters of a 2x2 unitary,
///   [[e^{ia} cos t, e^{ib} sin t], [-e^{ig} sin t, e^{i(b+g-a)} cos t]],
/// with phases in (-pi, pi] and theta in [0, pi/2].
struct UnitaryFactorization {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
    double theta = 0.0;
};

/// Linear-optical elements with Jones semantics. Angles in radians;
/// `angle` is the phase delay for PhasePlate, the rotation angle for
/// Rotator, and the fast-axis angle for the waveplates.
struct OpticalElement {
    enum class Kind { PhasePlate, Rotator, HalfWavePlate, QuarterWavePlate };

    Kind kind = Kind::PhasePlate;
    double angle = 0.0;

    static OpticalElement phase_plate(double delta) { return {Kind::PhasePlate, delta}; }
    static OpticalElement rotator(double theta) { return {Kind::Rotator, theta}; }
    static OpticalElement half_wave_plate(double axis) {
        return {Kind::HalfWavePlate, axis};
    }
    static OpticalElement quarter_wave_plate(double axis) {
        return {Kind::QuarterWavePlate, axis};
    }
};

/// Ordered element list, first element acts first. The Jones product times
/// e^{i global_phase} equals the realized unitary; the global phase is
/// recorded, never synthesized.
struct ElementSequence {
    std::vector<OpticalElement> elements;
    double global_phase = 0.0;
};

enum class PumpBranch { LowerHH, LowerVV };

/// Pump-waveplate configuration. Branch LowerHH attenuates the |HH>
/// emission (reaches x <= 1/sqrt2); LowerVV attenuates |VV> instead.
struct PumpSetting {
    PumpBranch branch = PumpBranch::LowerVV;
    double theta_p = 0.0;  // radians, [0, pi/4]
};

/// Reads the phase/rotation/phase parameters off a unitary. Entries of
/// modulus <= 1e-13 carry no argument: the matching phase defaults to 0 and
/// the remaining ones absorb the matrix's arguments. Throws
/// std::invalid_argument (reporting the deviation) if u is not unitary
/// within 1e-10.
UnitaryFactorization factorize_unitary(const ComplexMatrix2& u);

/// The matrix the factorization parameters describe.
ComplexMatrix2 reassemble(const UnitaryFactorization& f);

/// [PhasePlate(alpha-beta), Rotator(theta), PhasePlate(alpha-gamma)] with
/// recorded global phase alpha; the Jones product times the phase equals
/// reassemble(f) within 1e-12.
ElementSequence synthesize_sequence(const UnitaryFactorization& f);

/// The same unitary expressed with a half-wave plate in place of the
/// rotator: [PhasePlate(alpha-beta), HalfWavePlate(theta/2),
/// PhasePlate(alpha-gamma+pi)] with the same recorded global phase. This is
/// the waveplate-and-delay form used for the hardware realization.
ElementSequence waveplate_realization(const UnitaryFactorization& f);

/// Jones matrix of an element:
///   PhasePlate(d)       -> diag(1, e^{-id})      (delay of V relative to H)
///   Rotator(t)          -> [[cos t, sin t], [-sin t, cos t]]
///   HalfWavePlate(a)    -> [[cos 2a, sin 2a], [sin 2a, -cos 2a]]
///   QuarterWavePlate(a) -> rotated diag(1, -i) retarder
ComplexMatrix2 element_jones(const OpticalElement& e);

/// Product of the element Jones matrices (in acting order) times
/// e^{i global_phase}.
ComplexMatrix2 realized_unitary(const ElementSequence& s);

/// Seed amplitude produced by a pump setting:
///   LowerHH: x = cos(2 t) / sqrt(1 + cos^2(2 t))
///   LowerVV: x = 1 / sqrt(1 + cos^2(2 t))
/// Throws std::invalid_argument for theta_p outside [0, pi/4].
double seed_from_pump(const PumpSetting& p);

/// Inverse of seed_from_pump: branch LowerHH for x < 1/sqrt2, LowerVV
/// otherwise (tie at 1/sqrt2 goes to LowerVV). Throws for x outside [0,1].
PumpSetting pump_for_seed(double x);

} // namespace biphoton
