#pragma once

#include <string>
#include <vector>

#include "lucaszeta/residues.hpp"
#include "lucaszeta/special.hpp"

namespace lucaszeta::verify {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckResult> checks;

    bool passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return !checks.empty();
    }
};

struct SuiteConfig {
    long prec = 128;
    unsigned long long seed = 2026;
    long max_depth = 3;
    // Smaller grids for quick smoke runs (the acceptance suite uses false).
    bool quick = false;
};

// Deterministic cross-platform generator (splitmix64); identical streams
// for identical seeds regardless of toolchain.
class Rng {
public:
    explicit Rng(unsigned long long seed) : state_(seed) {}
    unsigned long long next_u64();
    double uniform(double lo, double hi);
    long uniform_long(long lo, long hi); // inclusive

private:
    unsigned long long state_;
};

SuiteResult suite_oracle_equivalence(const SuiteConfig& cfg);    // Thm-1 route vs oracle
SuiteResult suite_char_decomposition(const SuiteConfig& cfg);    // finite chi-combination
SuiteResult suite_residues(const SuiteConfig& cfg);              // closed form vs contour
SuiteResult suite_real_axis(const SuiteConfig& cfg);             // Gauss-sum certificates
SuiteResult suite_special_rationality(const SuiteConfig& cfg);   // exact surd-part sweep
SuiteResult suite_symmetrization_galois(const SuiteConfig& cfg); // rearrangement + pairing
SuiteResult suite_holomorphy_predicate(const SuiteConfig& cfg);  // parity vs exact scan
SuiteResult suite_classical(const SuiteConfig& cfg);             // spot checks

// name in {oracle, decomposition, residues, real-axis, special, galois,
// predicate, classical, all}.
std::vector<SuiteResult> run_suites(const std::string& name, const SuiteConfig& cfg);

} // namespace lucaszeta::verify
