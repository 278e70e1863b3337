#pragma once

#include <optional>
#include <string>
#include <vector>

#include "biphoton/optics.hpp"
#include "biphoton/qmath.hpp"

namespace biphoton {

/// On-disk state: {"dimension": 3|4, "amplitudes": [[re, im], ...]} with
/// amplitudes in the documented basis order (qutrit: |HH>,|VV>,|psi+>;
/// ququad: |HH>,|VV>,|HV>,|VH>). Extra keys are ignored on load.
struct StateFile {
    int dimension = 0;
    std::vector<cxd> amplitudes;
    bool renormalized = false;  // input norm was off by more than 1e-6
    double norm_deviation = 0.0;
};

/// On-disk encoding plan: seed amplitude, the two unitaries, provenance
/// ("svd" or "closed-form"), and optional element sequences for u and w.
struct PlanFile {
    double x = 1.0;
    ComplexMatrix2 u;
    ComplexMatrix2 w;
    std::string provenance = "svd";
    std::optional<ElementSequence> u_elements;
    std::optional<ElementSequence> w_elements;
};

/// Loads and validates a state file. Any nonzero input is renormalized;
/// deviations beyond the documented 1e-6 file tolerance are flagged so the
/// CLI can warn. A zero state, a dimension outside {3, 4}, a wrong
/// amplitude count, or non-finite entries throw std::invalid_argument;
/// unreadable or malformed files throw std::runtime_error.
StateFile load_state_file(const std::string& path);

void save_state_file(const std::string& path, const StateFile& s);

/// Loads and validates a plan: x in [0, 1], u and w unitary within 1e-10,
/// known provenance.
PlanFile load_plan_file(const std::string& path);

void save_plan_file(const std::string& path, const PlanFile& p);

/// One-line JSON block for a basis state, readable by load_state_file.
std::string state_block_json(int dimension, const std::vector<cxd>& amplitudes,
                             const std::string& basis_label, int index);

} // namespace biphoton
