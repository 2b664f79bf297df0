#pragma once

#include <functional>

#include "lucaszeta/continuation.hpp"

namespace lucaszeta {

struct ResidueValue {
    Complex closed_form;
    Complex numeric_check;
    Real rel_error; // |closed - numeric| / max(|closed|, tiny), never clipped
};

struct ResidueOptions {
    long prec = 160;
    TruncationPolicy policy{};      // for the continuation evaluations
    double contour_radius = 0.05;   // shrunk to half the nearest-pole gap
    double contour_tol = 1e-12;
    long max_nodes = 2048;
};

// (1/2 pi i) contour integral of F around `a` on a circle of radius rho,
// by the trapezoidal rule with node doubling (exponentially convergent for
// a meromorphic integrand with one simple pole inside).
Complex numeric_residue(const std::function<Complex(const Complex&)>& f, const Complex& a,
                        double rho, long prec, double tol, long max_nodes);

// Residue of the depth-d Dirichlet L-function along the last-variable
// hyperplane s_d = a_d(k', n), with s_1..s_{d-1} fixed at `partial`.
ResidueValue residue_dirichlet_last(const LucasParams& params,
                                    const std::vector<DirichletCharacter>& chars,
                                    const std::vector<Complex>& partial, long k_prime, long n,
                                    const ResidueOptions& opt);

// Residue along the suffix hyperplane s_j + ... + s_d = a_d(j) for j < d;
// `others` holds s_1..s_{j-1}, s_{j+1}..s_d (the free variables).
ResidueValue residue_dirichlet_inner(const LucasParams& params,
                                     const std::vector<DirichletCharacter>& chars, long j,
                                     long k_prime_sum, long n, const std::vector<Complex>& others,
                                     const ResidueOptions& opt);

ResidueValue residue_additive_last(const LucasParams& params, const AdditiveTuple& chars,
                                   const std::vector<Complex>& partial, long k_prime, long n,
                                   const ResidueOptions& opt);

ResidueValue residue_additive_inner(const LucasParams& params, const AdditiveTuple& chars, long j,
                                    long k_prime_sum, long n, const std::vector<Complex>& others,
                                    const ResidueOptions& opt);

struct RealAxisCandidate {
    long k_prime;
    long n;
    Real location_re;
    long gcd_with_q;
    long q_over_gcd;
    bool lemma_applies; // chi cannot be defined mod q/gcd
    bool tau_vanishes;  // exact cyclotomic tau(chi, n) = 0
};

struct RealAxisReport {
    std::vector<RealAxisCandidate> candidates;
    bool all_certified;
};

// Every real-axis pole candidate of the last-variable hyperplanes with
// Re in [re_min, re_max], each certified by an exact Gauss-sum vanishing.
RealAxisReport real_axis_holomorphy_report(const DirichletCharacter& chi_d,
                                           const LucasParams& params, double re_min,
                                           double re_max, long prec);

} // namespace lucaszeta
