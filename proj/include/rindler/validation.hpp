#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace rindler {

struct ValidationOptions
{
    double mass = 1.0;
    std::vector<double> accelerations{0.01, 0.02, 0.03};
    /// rel_diff bound for numeric eigenvalues against the closed form.
    double spectrum_tolerance = 1e-4;
    /// Components must sit below 1e-6 of their peak for |y| beyond this.
    double decay_y = 6.0;
};

struct CheckResult
{
    std::string name;
    int criterion = 0;  // 0 for checks outside the numbered acceptance list
    bool passed = false;
    std::string detail;
    nlohmann::json measured = nlohmann::json::object();
    double seconds = 0.0;
};

/// Criterion 1: eps_plus / eps_minus columns of the emitted spectrum CSVs
/// equal the closed form formatted independently; runtime under one second.
CheckResult check_spectrum_formula(const ValidationOptions& options);
/// Criterion 2: matrix eigenvalues at N = 4000 on |y| <= 10 against the
/// closed form, and shooting against the matrix path.
CheckResult check_numeric_agreement(const ValidationOptions& options);
/// Criterion 3: every spectrum dataset equals its negation.
CheckResult check_sign_symmetry(const ValidationOptions& options);
/// Criterion 4: cross-sector degeneracy, closed form and numeric.
CheckResult check_susy_degeneracy(const ValidationOptions& options);
/// Criterion 5: analytic spinors in the truncated first-order system.
CheckResult check_first_order_residual(const ValidationOptions& options);
/// Criterion 6: node counts and tail decay of the lower component.
CheckResult check_nodes_and_decay(const ValidationOptions& options);
/// Criterion 7: tetrad completeness, Clifford algebra, coordinate round trip.
CheckResult check_geometry_invariants(const ValidationOptions& options);
/// Criterion 8: terminated series against Hermite coefficients, in exact rationals.
CheckResult check_series_hermite(const ValidationOptions& options);
/// Criterion 9: truncation report at a = 0.01 and gap shrinkage as a decreases.
CheckResult check_truncation_envelope(const ValidationOptions& options);
/// Wavefunction datasets: unit norm and decay markers on the default grid.
CheckResult check_wavefunction_norms(const ValidationOptions& options);

/// Runs one numbered criterion (1..9). Throws std::out_of_range otherwise.
CheckResult run_criterion(int criterion, const ValidationOptions& options);

/// All checks in order: criteria 1..9 then the supplementary suites.
std::vector<CheckResult> run_validation(const ValidationOptions& options);

nlohmann::json to_json(const CheckResult& result);
nlohmann::json validation_report(const std::vector<CheckResult>& results, const ValidationOptions& options);

}  // namespace rindler
