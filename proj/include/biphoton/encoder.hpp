#pragma once

#include "biphoton/qmath.hpp"

namespace biphoton {

/// Qutrit amplitudes over the symmetric carrier triplet
/// {|HH>, |VV>, |psi+>}, |psi+> = (|HV> + |VH>)/sqrt2.
struct QutritState {
    cxd c0{}, c1{}, c2{};
};

using TwoQubitState = FourVector;

/// Seed amplitude plus the two local unitaries that produce a target state
/// from x|HH> + sqrt(1-x^2)|VV>. Always reported with x >= 1/sqrt2.
struct EncodingPlan {
    double x = 1.0;
    ComplexMatrix2 u;
    ComplexMatrix2 w;
};

/// The closed-form decomposition of the symmetric qutrit family: u, w and
/// the diagonal pair in formula order (d1 is NOT necessarily the larger).
struct XiDecomposition {
    ComplexMatrix2 u;
    double d1 = 0.0;
    double d2 = 0.0;
    ComplexMatrix2 w;
};

/// Removes the global phase: the first amplitude of modulus > 1e-12, in the
/// (alpha, beta, gamma, delta) order, becomes real positive. Throws
/// std::invalid_argument on the zero vector.
TwoQubitState canonicalize(const TwoQubitState& s);

/// Lift a qutrit to its two-qubit carrier: alpha = c0, beta = c1,
/// gamma = delta = c2/sqrt2. Norm-preserving.
TwoQubitState qutrit_embed(const QutritState& q);

/// Amplitude matrix of a state: m[0][0]=alpha, m[1][1]=beta, m[0][1]=gamma,
/// m[1][0]=delta.
ComplexMatrix2 state_to_matrix(const TwoQubitState& s);

/// Inverse of state_to_matrix; exact round trip.
TwoQubitState state_from_matrix(const ComplexMatrix2& m);

/// x|00> + sqrt(1-x^2)|11> for x in [0,1].
TwoQubitState seed_state(double x);

/// Seed-plus-local-unitaries plan: canonicalize, lift to the amplitude
/// matrix, decompose with svd2. tensor_apply(u, w, seed_state(x)) reproduces
/// canonicalize(s) with fidelity >= 1 - 1e-10. Throws on the zero vector.
EncodingPlan encode(const TwoQubitState& s);

/// tensor_apply(plan.u, plan.w, seed_state(plan.x)).
TwoQubitState apply_plan(const EncodingPlan& p);

/// |<a|b>|^2.
double fidelity(const TwoQubitState& a, const TwoQubitState& b);

/// Amplitude matrix of (1/sqrt3)(|HH> + e^{i psi}|VV> + e^{i phi}|psi+>):
/// (1/sqrt3) [[1, e^{i phi}/sqrt2], [e^{i phi}/sqrt2, e^{i psi}]].
ComplexMatrix2 xi_matrix(double psi, double phi);

/// Explicit closed-form u, d, w with u * diag(d) * transpose(w) equal to
/// xi_matrix(psi, phi). d is returned in formula order,
/// d1 = sqrt(1/2 + (sqrt2/3) cos(psi/2 - phi)), d2 with the opposite sign,
/// without re-sorting.
XiDecomposition xi_closed_form(double psi, double phi);

} // namespace biphoton
