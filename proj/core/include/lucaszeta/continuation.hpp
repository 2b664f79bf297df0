#pragma once

#include <optional>

#include "lucaszeta/poles.hpp"
#include "lucaszeta/series.hpp"

namespace lucaszeta {

struct TruncationPolicy {
    long initial_cutoff = 16;  // per-index cutoff on the k-sum
    long growth_factor = 2;
    long max_cutoff = 2048;
    double eps = 1e-24;        // target accuracy
    double pole_guard_radius = 1e-6;
    // Test hook: evaluate at exactly this cutoff, skipping adaptation.
    std::optional<long> forced_cutoff;
};

// Generalized binomial coefficient C(-s, k) = prod_{i<k} (-s - i)/(i + 1).
Complex binom_complex(const Complex& s, long k);

// Meromorphic continuation of the shifted multiple zeta: the binomial
// k-expansion evaluated as a finite-cutoff multi-index sum with rigorous
// geometric tail bounds; refuses points within the pole guard of an
// enumerated hyperplane.
EvalResult shifted_zeta_cont(const LucasParams& params, const ShiftSpec& shift,
                             const MultiPoint& s, const TruncationPolicy& policy, long prec);

// chi-weighted combination over residue tuples r in [1, q]^d of shifted
// continuations.
EvalResult dirichlet_L_cont(const LucasParams& params,
                            const std::vector<DirichletCharacter>& chars, const MultiPoint& s,
                            const TruncationPolicy& policy, long prec);

// Additive-character continuation.
EvalResult additive_L_cont(const LucasParams& params, const AdditiveTuple& chars,
                           const MultiPoint& s, const TruncationPolicy& policy, long prec);

} // namespace lucaszeta
