#pragma once

#include <vector>

#include "lucaszeta/characters.hpp"
#include "lucaszeta/lucas.hpp"
#include "lucaszeta/series.hpp"

namespace lucaszeta {

// Negative-integer argument tuple: the evaluation point is s = (-m_1, ..., -m_d).
struct NegIntPoint {
    std::vector<long> m;

    explicit NegIntPoint(std::vector<long> mm);
    std::size_t depth() const { return m.size(); }
    // m_j + ... + m_d.
    long suffix(std::size_t j) const;
};

struct SpecialValueResult {
    QuadExt value;      // D^{-m_d(1)/2} absorbed: exact element of Q(sqrt(D))
    bool is_rational = false;
    bool singular = false;
    // D is a perfect square: the value is exact but the rationality theorems
    // do not apply.
    bool requires_validation = false;
};

// Parity predicate of the holomorphy criterion:
//   Q = 1:  every m_d(j) odd;
//   Q = -1: every q*m_d(j) != 0 (mod 4);
//   Q != +-1 with sqrt(D) irrational: always holomorphic;
//   D square: decided by the exact denominator scan instead.
bool holomorphic_at_neg(const LucasParams& params, long q, const NegIntPoint& m);

// Exact scan: some k-sum K in [0, m_d(j)] makes a denominator
// 1 - Q^{qK} alpha^{-q(-m_d(j)+2K)} vanish.
bool singular_by_exact_scan(const LucasParams& params, long q, const NegIntPoint& m);

// Finite-sum evaluation at s = -m: the binomial series collapses because
// C(m, k) = 0 for k > m; every factor is exact in Q(sqrt(D)).
SpecialValueResult special_zeta_exact(const LucasParams& params, const ShiftSpec& shift,
                                      const NegIntPoint& m);

// One sigma-product of the 2^d-fold symmetrized expansion: the k-indices in
// `mask` are barred (k_t -> m_t - k_t).
struct SymmetrizedTerm {
    std::vector<long> k;
    unsigned mask = 0;
    QuadExt sigma;
};

struct SymmetrizedValue {
    SpecialValueResult result;
    std::vector<SymmetrizedTerm> terms;
};

// The symmetrized rearrangement: (D^{-m/2}/2^d) sum_k prod binom(m_t,k_t)
// sum over barring classes; totals the same value as special_zeta_exact
// exactly and returns the sigma-term list for the Galois audit.
SymmetrizedValue symmetrized_special_zeta(const LucasParams& params, const ShiftSpec& shift,
                                          const NegIntPoint& m);

// Exact check of the conjugation pairing psi(sigma_B) = (-1)^{m_d(1)}
// sigma_{complement of B} on every term.
bool galois_audit(const std::vector<SymmetrizedTerm>& terms, const NegIntPoint& m);

// The mechanical content of the rationality statement: the surd part must
// vanish exactly.
Rational assert_rational(const SpecialValueResult& result, const LucasParams& params);

// Quadratic-character L-value at -m: integer-weighted combination of exact
// shifted values; rational by the quadratic-character rationality theorem.
Rational special_L_quadratic(const LucasParams& params,
                             const std::vector<DirichletCharacter>& chars, const NegIntPoint& m);

// Additive-character special value with rational f_i(1).
Rational special_additive(const LucasParams& params, const AdditiveTuple& chars,
                          const NegIntPoint& m);

// Exact additive-denominator scan (alpha^{-m_d(j)+2K} = g_j Q^K for some
// reachable K).
bool additive_singular_by_exact_scan(const LucasParams& params, const AdditiveTuple& chars,
                                     const NegIntPoint& m);

} // namespace lucaszeta
