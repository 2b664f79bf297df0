#pragma once

#include <optional>
#include <vector>

#include "lucaszeta/characters.hpp"
#include "lucaszeta/complexnum.hpp"
#include "lucaszeta/lucas.hpp"

namespace lucaszeta {

// Point (s_1, ..., s_d) in C^d with the suffix sums s_d(j) = s_j + ... + s_d
// the theory is phrased in (s_d(d+1) = 0 by convention).
struct MultiPoint {
    std::vector<Complex> s;

    MultiPoint() = default;
    explicit MultiPoint(std::vector<Complex> coords) : s(std::move(coords)) {}
    static MultiPoint real(const std::vector<double>& re, long prec);

    std::size_t depth() const { return s.size(); }
    // s_j + ... + s_d (1-based j; j = d+1 gives 0).
    Complex suffix(std::size_t j) const;
    Real suffix_re(std::size_t j) const;
};

// Arithmetic-progression shift: indices q*n + (r_1 + ... + r_i).
struct ShiftSpec {
    long q = 1;
    std::vector<long> r;

    ShiftSpec() = default;
    ShiftSpec(long q_, std::vector<long> r_) : q(q_), r(std::move(r_)) {}

    std::size_t depth() const { return r.size(); }
    // r_j + ... + r_i cumulative from the left: R_i = r_1 + ... + r_i.
    long cumulative(std::size_t i) const;
    void validate() const;
};

struct EvalResult {
    Complex value;
    Real truncation_tail_bound;
    Real rounding_bound;
    long terms_used = 0;
};

// Suffix-sum domain test: sum_{i=j}^{d} Re(s_i) >= delta for every j.
// delta = 0 is the closed version of the convergence domain; the direct
// oracles require a strictly interior point.
bool in_domain(const MultiPoint& s, double delta);

struct OracleOptions {
    long prec = 128;          // result precision; evaluation adds guard bits
    double eps = 1e-30;       // target bound on the certified truncation tail
    long max_cutoff = 1 << 21; // per-evaluation cap on the index range
    // Test hook: force a fixed cutoff instead of adapting (no accuracy check).
    std::optional<long> forced_cutoff;
};

// Direct truncated summation of the four series inside the convergence
// domain. Every result carries a rigorous geometric tail bound derived from
// the Binet growth envelope.
EvalResult direct_multiple_zeta(const LucasSequenceCache& cache, const MultiPoint& s,
                                const OracleOptions& opt);
EvalResult direct_shifted_zeta(const LucasSequenceCache& cache, const ShiftSpec& shift,
                               const MultiPoint& s, const OracleOptions& opt);
EvalResult direct_dirichlet_L(const LucasSequenceCache& cache,
                              const std::vector<DirichletCharacter>& chars, const MultiPoint& s,
                              const OracleOptions& opt);
EvalResult direct_additive_L(const LucasSequenceCache& cache, const AdditiveTuple& chars,
                             const MultiPoint& s, const OracleOptions& opt);

} // namespace lucaszeta
