#pragma once

#include <string>
#include <vector>

#include "lucaszeta/characters.hpp"
#include "lucaszeta/complexnum.hpp"
#include "lucaszeta/lucas.hpp"

namespace lucaszeta {

enum class PoleVariant { ShiftedZeta, Dirichlet, Additive };

// One singular hyperplane s_j + ... + s_d = location. For the shifted and
// Dirichlet variants only the sum k' = k_j + ... + k_d enters the location;
// for the additive variant the location also carries log(g_j^d(1)).
struct PoleHyperplane {
    PoleVariant variant;
    long j = 1;
    long k_sum = 0;
    long n = 0;
    long ell = 0; // 0 for Q > 0, k_sum for Q < 0
    Complex location;
    // (k', n) pairs that name this same hyperplane (merged duplicates).
    std::vector<std::pair<long, long>> generators;
};

struct PoleWindow {
    double re_min, re_max, im_min, im_max;
};

// Location of the Eq.-style hyperplane for the shifted / Dirichlet family:
//   -2k' + k' log|Q|/log(alpha) + (2n/q + ell) pi i / log(alpha).
Complex zeta_pole_location(const LucasParams& params, long q, long k_sum, long n, long prec);

// Additive family: adds log(g)/log(alpha) (principal branch; the 2 pi i
// ambiguity is absorbed by the integer n) and uses (2n + ell).
Complex additive_pole_location(const LucasParams& params, const Complex& g, long k_sum, long n,
                               long prec);

std::vector<PoleHyperplane> enumerate_poles_zeta(const LucasParams& params, long q, long j,
                                                 long k_bound, long n_bound,
                                                 const PoleWindow& window, long prec);

std::vector<PoleHyperplane> enumerate_poles_additive(const LucasParams& params,
                                                     const AdditiveTuple& chars, long j,
                                                     long k_bound, long n_bound,
                                                     const PoleWindow& window, long prec);

// Distance from z to the nearest hyperplane of the family, scanning every
// (k', n) whose location can come within `pad` of z.
Real nearest_zeta_pole_distance(const LucasParams& params, long q, const Complex& z, double pad,
                                long prec);
Real nearest_additive_pole_distance(const LucasParams& params, const Complex& g, const Complex& z,
                                    double pad, long prec);

} // namespace lucaszeta
