// Command-line front end: encode states into seed-plus-unitaries plans,
// synthesize optical element sequences, build and verify mutually unbiased
// bases, solve pump-waveplate settings, and run the two-basis key-exchange
// simulation.

#include <cmath>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "biphoton/encoder.hpp"
#include "biphoton/io.hpp"
#include "biphoton/mub.hpp"
#include "biphoton/optics.hpp"

namespace {

using namespace biphoton;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitError = 2;

std::string angle_str(double radians) {
    std::ostringstream os;
    os << std::setprecision(17) << radians << " rad ("
       << std::setprecision(6) << radians * 180.0 / M_PI << " deg)";
    return os.str();
}

const char* element_name(OpticalElement::Kind k) {
    switch (k) {
        case OpticalElement::Kind::PhasePlate: return "phase_plate";
        case OpticalElement::Kind::Rotator: return "rotator";
        case OpticalElement::Kind::HalfWavePlate: return "half_wave_plate";
        case OpticalElement::Kind::QuarterWavePlate: return "quarter_wave_plate";
    }
    return "?";
}

void print_sequence(const std::string& tag, const ElementSequence& s) {
    std::cout << tag << ":";
    for (const OpticalElement& e : s.elements)
        std::cout << " " << element_name(e.kind) << "(" << angle_str(e.angle) << ")";
    std::cout << ", global_phase = " << angle_str(s.global_phase) << "\n";
}

TwoQubitState state_from_file(const StateFile& f) {
    if (f.dimension == 3)
        return qutrit_embed({f.amplitudes[0], f.amplitudes[1], f.amplitudes[2]});
    return {f.amplitudes[0], f.amplitudes[1], f.amplitudes[2], f.amplitudes[3]};
}

int cmd_encode(const std::string& input, const std::string& output) {
    const StateFile file = load_state_file(input);
    if (file.renormalized)
        std::cerr << "warning: " << input << " norm deviates from 1 by "
                  << file.norm_deviation << "; renormalized\n";

    const TwoQubitState target = state_from_file(file);
    const EncodingPlan plan = encode(target);
    const double d2 = std::sqrt(std::max(0.0, 1.0 - plan.x * plan.x));
    const double fid = fidelity(apply_plan(plan), canonicalize(target));

    std::cout << std::setprecision(17);
    std::cout << "x = " << plan.x << "\n";
    std::cout << "singular_values = " << plan.x << " " << d2 << "\n";
    std::cout << "fidelity = " << fid << "\n";

    save_plan_file(output, {plan.x, plan.u, plan.w, "svd", {}, {}});
    std::cout << "plan written to " << output << "\n";
    return fid >= 1.0 - 1e-10 ? kExitOk : kExitVerificationFailed;
}

int cmd_synthesize(const std::string& plan_path, const std::string& output) {
    PlanFile plan = load_plan_file(plan_path);

    bool ok = true;
    const ComplexMatrix2* matrices[2] = {&plan.u, &plan.w};
    const char* names[2] = {"u", "w"};
    ElementSequence sequences[2];
    for (int k = 0; k < 2; ++k) {
        const ComplexMatrix2& m = *matrices[k];
        const UnitaryFactorization f = factorize_unitary(m);
        sequences[k] = synthesize_sequence(f);
        const double residual = max_abs_diff(realized_unitary(sequences[k]), m);

        std::cout << std::setprecision(17);
        std::cout << names[k] << ": factorization alpha = " << f.alpha
                  << ", beta = " << f.beta << ", gamma = " << f.gamma
                  << ", theta = " << angle_str(f.theta) << "\n";
        print_sequence(std::string(names[k]) + ": elements", sequences[k]);
        print_sequence(std::string(names[k]) + ": waveplates", waveplate_realization(f));
        std::cout << names[k] << ": residual = " << residual << "\n";
        ok = ok && residual <= 1e-10;
    }

    if (!output.empty()) {
        plan.u_elements = sequences[0];
        plan.w_elements = sequences[1];
        save_plan_file(output, plan);
        std::cout << "plan with element sequences written to " << output << "\n";
    }
    return ok ? kExitOk : kExitVerificationFailed;
}

int cmd_mub(int dimension, double tol, bool emit_states) {
    if (dimension != 3 && dimension != 4) {
        std::cerr << "error: dimension must be 3 or 4\n";
        return kExitError;
    }
    const std::vector<Basis> family =
        dimension == 3 ? qutrit_mub_family() : ququad_mub_family();
    const MubReport report = verify_mub(family, tol);

    std::cout << std::setprecision(17);
    std::cout << "dimension = " << dimension << ", bases = " << family.size() << " (";
    for (std::size_t i = 0; i < family.size(); ++i)
        std::cout << (i ? ", " : "") << family[i].label;
    std::cout << ")\n";
    std::cout << "orthonormality_deviation = " << report.orthonormality_deviation
              << "\n";
    std::cout << "overlap_deviation = " << report.overlap_deviation << "\n";
    std::cout << "tolerance = " << report.tol << "\n";
    if (dimension == 4) {
        std::cout << "bell:";
        for (const Basis& b : family)
            std::cout << " " << b.label << "=" << (bell_check(b) ? "yes" : "no");
        std::cout << "\n";
    }
    std::cout << "result: " << (report.passed ? "PASS" : "FAIL") << "\n";

    if (emit_states) {
        for (const Basis& b : family)
            for (std::size_t i = 0; i < b.states.size(); ++i)
                std::cout << state_block_json(b.dimension, b.states[i], b.label,
                                              static_cast<int>(i))
                          << "\n";
    }
    return report.passed ? kExitOk : kExitVerificationFailed;
}

int cmd_pump(double x) {
    const PumpSetting p = pump_for_seed(x);
    const double back = seed_from_pump(p);

    std::cout << std::setprecision(17);
    std::cout << "x = " << x << "\n";
    std::cout << "branch = "
              << (p.branch == PumpBranch::LowerHH ? "LowerHH" : "LowerVV") << "\n";
    std::cout << "theta_p = " << angle_str(p.theta_p) << "\n";
    std::cout << "seed_from_pump(theta_p) = " << back << " (residual "
              << std::abs(back - x) << ")\n";
    return kExitOk;
}

int cmd_qkd(std::uint64_t rounds, bool eve, std::uint64_t rng_seed) {
    const QkdOutcome out = simulate_two_basis_qkd(rounds, eve, rng_seed);
    std::cout << std::setprecision(17);
    std::cout << "rounds=" << out.rounds << " sifted=" << out.sifted
              << " errors=" << out.errors << " sift_rate=" << out.sift_rate
              << " qber=" << out.qber << " rng_seed=" << out.rng_seed << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-photon polarization qudit engineering toolkit"};
    app.require_subcommand(1);

    std::string input, output, plan_path, synth_output;
    CLI::App* encode_cmd =
        app.add_subcommand("encode", "Encode a state file into a seed+unitaries plan");
    encode_cmd->add_option("input", input, "state file (JSON)")->required();
    encode_cmd->add_option("output", output, "plan file to write")->required();

    CLI::App* synth_cmd = app.add_subcommand(
        "synthesize", "Factorize plan unitaries into optical element sequences");
    synth_cmd->add_option("plan", plan_path, "plan file (JSON)")->required();
    synth_cmd->add_option("-o,--output", synth_output,
                          "write the plan back with element sequences embedded");

    int dimension = 0;
    double tol = 1e-10;
    bool emit_states = false;
    CLI::App* mub_cmd =
        app.add_subcommand("mub", "Build and verify the mutually unbiased bases");
    mub_cmd->add_option("-d,--dimension", dimension, "qudit dimension (3 or 4)")
        ->required();
    mub_cmd->add_option("--tol", tol, "verification tolerance (default 1e-10)");
    mub_cmd->add_flag("--emit-states", emit_states,
                      "print every basis state as a JSON block");

    double x = 0.0;
    CLI::App* pump_cmd = app.add_subcommand(
        "pump", "Pump-waveplate angle realizing a seed amplitude x");
    pump_cmd->add_option("x", x, "seed amplitude in [0, 1]")->required();

    std::uint64_t rounds = 0;
    std::uint64_t rng_seed = 1;
    bool eve = false;
    CLI::App* qkd_cmd =
        app.add_subcommand("qkd", "Simulate the two-basis ququad key exchange");
    qkd_cmd->add_option("--rounds", rounds, "number of rounds")->required();
    qkd_cmd->add_flag("--eve", eve, "insert an intercept-resend eavesdropper");
    qkd_cmd->add_option("--rng-seed", rng_seed, "simulation seed (default 1)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (encode_cmd->parsed()) return cmd_encode(input, output);
        if (synth_cmd->parsed()) return cmd_synthesize(plan_path, synth_output);
        if (mub_cmd->parsed()) return cmd_mub(dimension, tol, emit_states);
        if (pump_cmd->parsed()) return cmd_pump(x);
        if (qkd_cmd->parsed()) return cmd_qkd(rounds, eve, rng_seed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
