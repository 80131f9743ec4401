#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "debruijn/operators.hpp"
#include "debruijn/word.hpp"

namespace debruijn {

struct CheckResult {
    std::string name;
    bool pass = false;
    double residual = 0.0;
    double tolerance = 0.0;
    double wall_ms = 0.0;
};

struct RunReport {
    int q = 0;
    int k_max = 0;
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;

    bool all_pass() const;
    double total_ms() const;
};

// Runs the whole cross-module property suite at desk scale: operator
// identities in both frames, transform conjugation, closed-form eigenpairs
// against dense oracles, basis orthogonality and kernel membership,
// Toeplitz block compression, contraction/lift recursions, circular-count
// residuals, and the word-algebra axioms. Deterministic for a fixed seed.
// Checks in the 1e-9 class use tolerances.float_tol; integer-exact checks
// use tolerances.exact_tol.
RunReport run_invariant_suite(int q, int k_max, std::uint64_t seed,
                              const ToleranceConfig& tolerances = {},
                              Index dense_limit = kDefaultDenseLimit);

// Fixed-width table including wall times (for terminals).
std::string report_text(const RunReport& report);
// Deterministic serialization: identical runs produce identical bytes, so
// wall times are omitted.
std::string report_json(const RunReport& report);

} // namespace debruijn
