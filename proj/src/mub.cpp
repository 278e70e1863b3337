#include "biphoton/mub.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

namespace biphoton {

namespace {

const double kSqrt2 = std::sqrt(2.0);
const double kSqrt3 = std::sqrt(3.0);

cxd phase_w(int k) {  // w^k, w = e^{2 pi i / 3}
    return std::polar(1.0, 2.0 * M_PI * k / 3.0);
}

std::vector<cxd> qutrit_phase_state(int a, int b) {
    return {cxd{1.0 / kSqrt3, 0.0}, phase_w(a) / kSqrt3, phase_w(b) / kSqrt3};
}

using Qubit = std::array<cxd, 2>;

/// Product state in the standard |00>,|01>,|10>,|11> order.
std::array<cxd, 4> product(const Qubit& f, const Qubit& s) {
    return {f[0] * s[0], f[0] * s[1], f[1] * s[0], f[1] * s[1]};
}

/// Standard order -> file order (|00>, |11>, |01>, |10>).
std::vector<cxd> to_file_order(const std::array<cxd, 4>& std_order) {
    return {std_order[0], std_order[3], std_order[1], std_order[2]};
}

std::vector<cxd> superpose(const std::array<cxd, 4>& p, const std::array<cxd, 4>& q,
                           double sign) {
    std::array<cxd, 4> r;
    for (int k = 0; k < 4; ++k) r[k] = (p[k] + sign * q[k]) / kSqrt2;
    return to_file_order(r);
}

cxd state_inner(const std::vector<cxd>& a, const std::vector<cxd>& b) {
    cxd s{0.0, 0.0};
    for (std::size_t k = 0; k < a.size(); ++k) s += std::conj(a[k]) * b[k];
    return s;
}

FourVector to_four_vector(const std::vector<cxd>& file_order) {
    return {file_order[0], file_order[1], file_order[2], file_order[3]};
}

// --- deterministic per-round randomness ---------------------------------

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double uniform01(std::mt19937_64& g) { return (g() >> 11) * 0x1.0p-53; }

/// Uniform in {0..n-1}; exact for n dividing 2^64.
int uniform_index(std::mt19937_64& g, int n) {
    return static_cast<int>(g() % static_cast<std::uint64_t>(n));
}

int sample_outcome(const std::array<double, 4>& probs, double u) {
    double cumulative = 0.0;
    for (int j = 0; j < 3; ++j) {
        cumulative += probs[j];
        if (u < cumulative) return j;
    }
    return 3;
}

} // namespace

std::vector<Basis> qutrit_mub_family() {
    std::vector<Basis> family(4);

    family[0].dimension = 3;
    family[0].label = "computational";
    family[0].states = {{cxd{1.0, 0.0}, {}, {}},
                        {{}, cxd{1.0, 0.0}, {}},
                        {{}, {}, cxd{1.0, 0.0}}};

    const std::array<std::array<std::array<int, 2>, 3>, 3> phase_triples{{
        {{{0, 0}, {1, 2}, {2, 1}}},
        {{{0, 1}, {1, 0}, {2, 2}}},
        {{{0, 2}, {2, 0}, {1, 1}}},
    }};
    const char* labels[3] = {"fourier", "fourier+1", "fourier+2"};
    for (int k = 0; k < 3; ++k) {
        family[k + 1].dimension = 3;
        family[k + 1].label = labels[k];
        for (const auto& ab : phase_triples[k])
            family[k + 1].states.push_back(qutrit_phase_state(ab[0], ab[1]));
    }
    return family;
}

std::vector<Basis> ququad_mub_family() {
    const Qubit e0{cxd{1.0, 0.0}, cxd{0.0, 0.0}};
    const Qubit e1{cxd{0.0, 0.0}, cxd{1.0, 0.0}};
    const Qubit xp{cxd{1.0 / kSqrt2, 0.0}, cxd{1.0 / kSqrt2, 0.0}};
    const Qubit xm{cxd{1.0 / kSqrt2, 0.0}, cxd{-1.0 / kSqrt2, 0.0}};
    const Qubit yp{cxd{1.0 / kSqrt2, 0.0}, cxd{0.0, 1.0 / kSqrt2}};
    const Qubit ym{cxd{1.0 / kSqrt2, 0.0}, cxd{0.0, -1.0 / kSqrt2}};

    std::vector<Basis> family(5);
    family[0] = {4,
                 {to_file_order(product(e0, e0)), to_file_order(product(e0, e1)),
                  to_file_order(product(e1, e0)), to_file_order(product(e1, e1))},
                 "I"};
    family[1] = {4,
                 {to_file_order(product(xp, xp)), to_file_order(product(xp, xm)),
                  to_file_order(product(xm, xp)), to_file_order(product(xm, xm))},
                 "II"};
    family[2] = {4,
                 {to_file_order(product(yp, yp)), to_file_order(product(yp, ym)),
                  to_file_order(product(ym, yp)), to_file_order(product(ym, ym))},
                 "III"};
    family[3] = {4,
                 {superpose(product(yp, e0), product(ym, e1), +1.0),
                  superpose(product(yp, e0), product(ym, e1), -1.0),
                  superpose(product(ym, e0), product(yp, e1), +1.0),
                  superpose(product(ym, e0), product(yp, e1), -1.0)},
                 "IV"};
    family[4] = {4,
                 {superpose(product(e0, yp), product(e1, ym), +1.0),
                  superpose(product(e0, yp), product(e1, ym), -1.0),
                  superpose(product(e0, ym), product(e1, yp), +1.0),
                  superpose(product(e0, ym), product(e1, yp), -1.0)},
                 "V"};
    return family;
}

bool bell_check(const Basis& b) {
    if (b.dimension != 4)
        throw std::invalid_argument("bell_check: basis dimension must be 4");
    for (const auto& state : b.states) {
        const auto [s1, s2] = schmidt_coefficients(to_four_vector(state));
        if (std::abs(s1 - 1.0 / kSqrt2) > 1e-12 || std::abs(s2 - 1.0 / kSqrt2) > 1e-12)
            return false;
    }
    return true;
}

MubReport verify_mub(const std::vector<Basis>& bases, double tol) {
    if (bases.empty()) return {0.0, 0.0, tol, true};
    const int d = bases.front().dimension;
    for (const Basis& b : bases) {
        if (b.dimension != d)
            throw std::invalid_argument("verify_mub: mixed basis dimensions");
        if (static_cast<int>(b.states.size()) != d)
            throw std::invalid_argument("verify_mub: basis is not complete");
    }

    MubReport report;
    report.tol = tol;
    for (const Basis& b : bases) {
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                const cxd g = state_inner(b.states[i], b.states[j]);
                const double target = (i == j) ? 1.0 : 0.0;
                report.orthonormality_deviation =
                    std::max(report.orthonormality_deviation, std::abs(g - target));
            }
    }
    for (std::size_t a = 0; a < bases.size(); ++a)
        for (std::size_t b = a + 1; b < bases.size(); ++b)
            for (const auto& sa : bases[a].states)
                for (const auto& sb : bases[b].states) {
                    const double overlap = std::norm(state_inner(sa, sb));
                    report.overlap_deviation = std::max(
                        report.overlap_deviation, std::abs(overlap - 1.0 / d));
                }
    report.passed = report.orthonormality_deviation <= tol &&
                    report.overlap_deviation <= tol;
    return report;
}

QkdOutcome simulate_two_basis_qkd(std::uint64_t rounds, bool eve,
                                  std::uint64_t rng_seed) {
    const std::vector<Basis> family = ququad_mub_family();
    const Basis* bell_bases[2] = {&family[3], &family[4]};

    // Exact outcome probabilities: prob[a][i][b][j] of projecting state i of
    // basis a onto state j of basis b.
    std::array<double, 4> prob[2][4][2];
    for (int a = 0; a < 2; ++a)
        for (int i = 0; i < 4; ++i)
            for (int b = 0; b < 2; ++b)
                for (int j = 0; j < 4; ++j)
                    prob[a][i][b][j] = std::norm(state_inner(
                        bell_bases[b]->states[j], bell_bases[a]->states[i]));

    QkdOutcome out;
    out.rounds = rounds;
    out.rng_seed = rng_seed;
    for (std::uint64_t r = 0; r < rounds; ++r) {
        std::mt19937_64 gen(splitmix64(rng_seed + r));
        const int alice_basis = uniform_index(gen, 2);
        const int alice_state = uniform_index(gen, 4);
        const int bob_basis = uniform_index(gen, 2);

        int sent_basis = alice_basis;
        int sent_state = alice_state;
        if (eve) {
            const int eve_basis = uniform_index(gen, 2);
            sent_state = sample_outcome(prob[sent_basis][sent_state][eve_basis],
                                        uniform01(gen));
            sent_basis = eve_basis;
        }

        if (bob_basis != alice_basis) continue;
        ++out.sifted;
        const int bob_outcome =
            sample_outcome(prob[sent_basis][sent_state][bob_basis], uniform01(gen));
        if (bob_outcome != alice_state) ++out.errors;
    }
    out.sift_rate = rounds ? static_cast<double>(out.sifted) / rounds : 0.0;
    out.qber = out.sifted ? static_cast<double>(out.errors) / out.sifted : 0.0;
    return out;
}

} // namespace biphoton
