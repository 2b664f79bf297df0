#include "lucaszeta/poles.hpp"

#include "lucaszeta/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace lucaszeta {

namespace {

long ell_of(const Rational& q_param, long k_sum) { return q_param > 0 ? 0 : k_sum; }

// Re(location) = k' * (-2 + log|Q|/log alpha); the coefficient is strictly
// negative because |Q| < alpha^2.
double real_slope(const LucasParams& params) {
    double la = params.log_alpha(64).to_double();
    double lq = params.log_abs_q(64).to_double();
    return -2.0 + lq / la;
}

} // namespace

Complex zeta_pole_location(const LucasParams& params, long q, long k_sum, long n, long prec) {
    long wp = prec + 16;
    Real la = params.log_alpha(wp);
    Real re = Real::of(-2 * k_sum, wp) + Real::of(k_sum, wp) * params.log_abs_q(wp) / la;
    Real im = (Real::of(Rational(2 * n, q), wp) + Real::of(ell_of(params.q_param(), k_sum), wp)) *
              Real::pi(wp) / la;
    return Complex{re.round_to(prec), im.round_to(prec)};
}

Complex additive_pole_location(const LucasParams& params, const Complex& g, long k_sum, long n,
                               long prec) {
    if (g.is_zero()) fail(ErrorCode::ZeroCharacterValue, "partial product g is zero");
    long wp = prec + 16;
    Real la = params.log_alpha(wp);
    Complex lg = log(g.round_to(wp)); // principal branch
    Real re = Real::of(-2 * k_sum, wp) + Real::of(k_sum, wp) * params.log_abs_q(wp) / la +
              lg.re / la;
    Real im = (Real::of(2 * n + ell_of(params.q_param(), k_sum), wp)) * Real::pi(wp) / la +
              lg.im / la;
    return Complex{re.round_to(prec), im.round_to(prec)};
}

namespace {

std::vector<PoleHyperplane> enumerate_impl(const LucasParams& params, PoleVariant variant, long q,
                                           const Complex* g, long j, long k_bound, long n_bound,
                                           const PoleWindow& window, long prec) {
    std::vector<PoleHyperplane> out;
    // Canonical key: exact rational invariants of the location so duplicates
    // merge without floating comparisons. Key = (k', 2n/q + ell) for the zeta
    // family; the additive family adds nothing rational beyond (k', n).
    std::map<std::pair<long, Rational>, std::size_t> seen;
    for (long k = 0; k <= k_bound; ++k) {
        for (long n = -n_bound; n <= n_bound; ++n) {
            Complex loc = (variant == PoleVariant::Additive)
                              ? additive_pole_location(params, *g, k, n, prec)
                              : zeta_pole_location(params, q, k, n, prec);
            double re = loc.re.to_double();
            double im = loc.im.to_double();
            if (re < window.re_min || re > window.re_max || im < window.im_min ||
                im > window.im_max)
                continue;
            long ell = ell_of(params.q_param(), k);
            Rational imag_key = (variant == PoleVariant::Additive)
                                    ? Rational(2 * n + ell)
                                    : Rational(2 * n, q) + Rational(ell);
            imag_key.canonicalize();
            auto key = std::make_pair(k, imag_key);
            auto it = seen.find(key);
            if (it != seen.end()) {
                out[it->second].generators.emplace_back(k, n);
                continue;
            }
            PoleHyperplane h;
            h.variant = variant;
            h.j = j;
            h.k_sum = k;
            h.n = n;
            h.ell = ell;
            h.location = loc;
            h.generators.emplace_back(k, n);
            seen.emplace(key, out.size());
            out.push_back(std::move(h));
        }
    }
    std::sort(out.begin(), out.end(), [](const PoleHyperplane& a, const PoleHyperplane& b) {
        double ra = a.location.re.to_double(), rb = b.location.re.to_double();
        if (ra != rb) return ra > rb;
        return a.location.im.to_double() < b.location.im.to_double();
    });
    return out;
}

Real nearest_pole_distance_impl(const LucasParams& params, PoleVariant variant, long q,
                                const Complex* g, const Complex& z, double pad, long prec) {
    long wp = prec + 16;
    double slope = real_slope(params);
    double zre = z.re.to_double();
    double zim = z.im.to_double();
    double la = params.log_alpha(64).to_double();
    double pi_over_la = M_PI / la;
    double g_re_shift = 0, g_im_shift = 0;
    if (variant == PoleVariant::Additive) {
        Complex lg = log(g->round_to(64));
        g_re_shift = lg.re.to_double() / la;
        g_im_shift = lg.im.to_double() / la;
    }

    long k_max = static_cast<long>(std::ceil((std::abs(zre) + pad + std::abs(g_re_shift) + 2) /
                                             -slope)) +
                 1;
    Real best = Real::of(1e300, wp);
    for (long k = 0; k <= k_max; ++k) {
        double re_k = slope * k + g_re_shift;
        // Locations only move left as k grows.
        if (re_k < zre - pad - 1) break;
        long ell = ell_of(params.q_param(), k);
        // Solve the imaginary part for the nearest integer n.
        double target;
        long n0;
        if (variant == PoleVariant::Additive) {
            target = (zim - g_im_shift) / pi_over_la; // = 2n + ell
            n0 = std::lround((target - ell) / 2.0);
        } else {
            target = zim / pi_over_la; // = 2n/q + ell
            n0 = std::lround((target - ell) * q / 2.0);
        }
        for (long n = n0 - 2; n <= n0 + 2; ++n) {
            Complex loc = (variant == PoleVariant::Additive)
                              ? additive_pole_location(params, *g, k, n, wp)
                              : zeta_pole_location(params, q, k, n, wp);
            Real dist = abs(Complex{z.re - loc.re, z.im - loc.im});
            if (dist < best) best = dist;
        }
    }
    return best.round_to(prec);
}

} // namespace

std::vector<PoleHyperplane> enumerate_poles_zeta(const LucasParams& params, long q, long j,
                                                 long k_bound, long n_bound,
                                                 const PoleWindow& window, long prec) {
    if (q < 1) fail(ErrorCode::BadInput, "q must be >= 1");
    return enumerate_impl(params, PoleVariant::ShiftedZeta, q, nullptr, j, k_bound, n_bound,
                          window, prec);
}

std::vector<PoleHyperplane> enumerate_poles_additive(const LucasParams& params,
                                                     const AdditiveTuple& chars, long j,
                                                     long k_bound, long n_bound,
                                                     const PoleWindow& window, long prec) {
    Complex g = chars.g_value(static_cast<std::size_t>(j), prec + 16);
    return enumerate_impl(params, PoleVariant::Additive, 1, &g, j, k_bound, n_bound, window,
                          prec);
}

Real nearest_zeta_pole_distance(const LucasParams& params, long q, const Complex& z, double pad,
                                long prec) {
    return nearest_pole_distance_impl(params, PoleVariant::ShiftedZeta, q, nullptr, z, pad, prec);
}

Real nearest_additive_pole_distance(const LucasParams& params, const Complex& g, const Complex& z,
                                    double pad, long prec) {
    return nearest_pole_distance_impl(params, PoleVariant::Additive, 1, &g, z, pad, prec);
}

} // namespace lucaszeta
