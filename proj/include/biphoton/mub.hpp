#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "biphoton/qmath.hpp"

namespace biphoton {

/// Orthonormal basis of a d-level system, d in {3, 4}. States are stored in
/// the file amplitude order: (|HH>, |VV>, |psi+>) for d = 3 and
/// (|HH>, |VV>, |HV>, |VH>) for d = 4.
struct Basis {
    int dimension = 0;
    std::vector<std::vector<cxd>> states;
    std::string label;
};

/// Worst-case deviations of a basis family from the mutually-unbiased
/// ideal: max|Gram - I| within each basis, and max| |<a|b>|^2 - 1/d | over
/// cross-basis state pairs. Passed iff both stay within the checked
/// tolerance.
struct MubReport {
    double orthonormality_deviation = 0.0;
    double overlap_deviation = 0.0;
    double tol = 0.0;
    bool passed = false;
};

/// Tally of a key-exchange simulation run.
struct QkdOutcome {
    std::uint64_t rounds = 0;
    std::uint64_t sifted = 0;
    std::uint64_t errors = 0;
    double sift_rate = 0.0;
    double qber = 0.0;
    std::uint64_t rng_seed = 0;

    bool operator==(const QkdOutcome&) const = default;
};

/// The four pairwise mutually unbiased qutrit bases: the carrier triplet
/// {|HH>, |VV>, |psi+>}, the balanced phase basis, and the two further
/// phase bases (1/sqrt3)(|HH> + w^a|VV> + w^b|psi+>), w = e^{2 pi i/3},
/// with (a, b) running over {(0,1),(1,0),(2,2)} and {(0,2),(2,0),(1,1)}.
std::vector<Basis> qutrit_mub_family();

/// The five pairwise mutually unbiased two-qubit bases I-V: three product
/// bases (the common eigenbases of sz⊗sz, sx⊗sx, sy⊗sy) and two Bell
/// bases, every state normalized. |0> = |H>, |1> = |V>.
std::vector<Basis> ququad_mub_family();

/// True iff every state of a d = 4 basis has Schmidt pair
/// (1/sqrt2, 1/sqrt2) within 1e-12. Throws std::invalid_argument for other
/// dimensions.
bool bell_check(const Basis& b);

/// Deviation report over a family of same-dimension bases. Throws
/// std::invalid_argument on mixed dimensions.
MubReport verify_mub(const std::vector<Basis>& bases, double tol);

/// Two-basis key exchange over the Bell bases IV and V. Alice sends a
/// uniformly chosen state of a uniformly chosen basis, Bob measures in a
/// uniformly chosen one of the two, and rounds with matching bases are
/// sifted; with eve, an intercept-resend attack in a uniformly chosen one
/// of the same two bases is inserted. Outcome probabilities are the exact
/// squared overlaps.
///
/// Randomness: round r draws from mt19937_64 seeded with
/// splitmix64(rng_seed + r), in the fixed order alice-basis, alice-state,
/// bob-basis, [eve-basis, eve-outcome], bob-outcome, so runs are
/// reproducible and rounds are independent substreams.
QkdOutcome simulate_two_basis_qkd(std::uint64_t rounds, bool eve,
                                  std::uint64_t rng_seed);

} // namespace biphoton
