#include "lucaszeta/continuation.hpp"

#include "lucaszeta/errors.hpp"

#include <algorithm>
#include <cmath>

namespace lucaszeta {

Complex binom_complex(const Complex& s, long k) {
    long prec = s.prec();
    Complex acc = Complex::of(1, prec);
    for (long i = 0; i < k; ++i) acc = acc * (-s - Complex::of(i, prec)) / Real::of(i + 1, prec);
    return acc;
}

namespace {

// Shared state of one multi-index evaluation of the product form
//   D^{s_d(1)/2} sum_k prod_j C(-s_j,k_j)(-1)^{k_j} prod_j fac_j(K_j),
// where K_j = k_j + ... + k_d and
//   fac_j(K) = w_j(K)^{r_j} / (1 - w_j(K)^q)          (shifted family)
//   fac_j(K) = g_j w_j(K) / (1 - g_j w_j(K))          (additive family)
// with w_j(K) = Q^K alpha^{-(s_d(j) + 2K)}.
struct AxisSpec {
    Complex s;          // s_j
    Real abs_s;         // |s_j|
    long x_exponent;    // per-axis geometric base is rho^{x_exponent}
};

struct FactorSpec {
    Complex u;                  // alpha^{-s_d(j)}
    long r = 1;                 // r_j (shifted) — additive uses r = 1
    long q = 1;                 // q (shifted) — additive uses q = 1
    std::optional<Complex> g;   // g_j^d(1) for the additive family
    Real sigma_suffix;          // Re(s_d(j))
};

struct ConvResult {
    Complex sum;       // multi-index sum before the D^{s/2} prefactor
    Real tail;         // certified bound on the dropped multi-indices
    long terms;
    Real abs_bound;    // bound on sum of |terms| within the cutoff
    bool certified;
};

class ProductFormEvaluator {
public:
    ProductFormEvaluator(const LucasParams& params, std::vector<AxisSpec> axes,
                         std::vector<FactorSpec> facs, long wp)
        : params_(params), axes_(std::move(axes)), facs_(std::move(facs)), wp_(wp),
          env_(params.envelope(wp)) {}

    ConvResult run(long cutoff) {
        const long d = static_cast<long>(axes_.size());
        const long kap = cutoff;
        const Real one = Real::of(1L, wp_);
        Real q_over_a2 = Real::of(params_.q_param(), wp_) /
                         (params_.alpha_real(wp_) * params_.alpha_real(wp_));

        // Binomial ladders B_j(k) = C(-s_j, k)(-1)^k.
        std::vector<std::vector<Complex>> binom(d);
        for (long j = 0; j < d; ++j) {
            binom[j].reserve(kap + 1);
            Complex b = Complex::of(1, wp_);
            binom[j].push_back(b);
            for (long k = 0; k < kap; ++k) {
                b = b * (axes_[j].s + Complex::of(k, wp_)) / Real::of(k + 1, wp_);
                binom[j].push_back(b);
            }
        }

        // Factor ladders fac_j(K) plus the data the tail bound needs.
        std::vector<std::vector<Complex>> fac(d);
        std::vector<Real> dmax(d, Real::of(2L, wp_));
        std::vector<bool> dmax_certified(d, false);
        Real half = Real::of(1L, wp_) / 2;
        for (long j = 0; j < d; ++j) {
            fac[j].reserve(kap + 1);
            Complex w = facs_[j].u;
            Real abs_w = abs(w);
            Real dm = Real::of(2L, wp_);
            bool cert = false;
            for (long K = 0; K <= kap; ++K) {
                Complex num, den;
                if (facs_[j].g) {
                    num = *facs_[j].g * w;
                    den = Complex::of(1, wp_) - num;
                } else {
                    num = pow_si(w, facs_[j].r);
                    den = Complex::of(1, wp_) - pow_si(w, facs_[j].q);
                }
                Real aden = abs(den);
                if (aden.is_zero())
                    fail(ErrorCode::PoleProximity, "denominator vanished at k-sum " +
                                                       std::to_string(K));
                fac[j].push_back(num / den);
                // Once |w^q| (resp. |g w|) <= 1/2 the denominators stay >= 1/2
                // for every larger K, so 2 bounds 1/|den| from here on.
                Real amag = facs_[j].g ? abs(*facs_[j].g) * abs_w : pow_si(abs_w, facs_[j].q);
                if (!cert && amag <= half) cert = true;
                if (!cert) {
                    Real inv = bounds::div_up(one, aden);
                    if (inv > dm) dm = inv;
                }
                w = w * q_over_a2;
                abs_w = abs_w * abs(q_over_a2);
            }
            dmax[j] = bounds::mul_up(dm, one + ldexp(one, -(wp_ - 8)));
            dmax_certified[j] = cert;
        }

        // Convolution up the suffix axes: A_j(K) over K = 0..kap.
        std::vector<Complex> acc(kap + 1, Complex(wp_));
        acc[0] = Complex::of(1, wp_);
        long terms = 0;
        for (long j = d - 1; j >= 0; --j) {
            std::vector<Complex> next(kap + 1, Complex(wp_));
            for (long K = 0; K <= kap; ++K) {
                Complex conv(wp_);
                for (long k = 0; k <= K; ++k) {
                    if (acc[K - k].is_zero()) continue;
                    conv += binom[j][k] * acc[K - k];
                    ++terms;
                }
                next[K] = fac[j][K] * conv;
            }
            acc = std::move(next);
        }
        Complex total(wp_);
        for (long K = 0; K <= kap; ++K) total += acc[K];

        Real inf(wp_);
        mpfr_set_inf(inf.raw(), 1);
        ConvResult out{total, inf, terms, inf, true};
        for (bool c : dmax_certified)
            if (!c) out.certified = false;

        // ---- certified tail over the dropped region {sum k_i > kap} ----
        // |term(k)| <= Cfac * prod_i |B_i(k_i)| x_i^{k_i} with
        // x_i = rho^{x_exponent_i} and
        // Cfac = prod_j dmax_j * alpha^{-sigma_j r_j} (resp. |g_j| ...).
        Real cfac = one;
        for (long j = 0; j < d; ++j) {
            Real numconst =
                bounds::rpow_up(env_.alpha_lo, env_.alpha_hi,
                                -facs_[j].sigma_suffix * Real::of(facs_[j].g ? 1 : facs_[j].r, wp_));
            if (facs_[j].g) numconst = bounds::mul_up(numconst, abs(*facs_[j].g) + ldexp(one, -(wp_ - 8)));
            cfac = bounds::mul_up(cfac, bounds::mul_up(dmax[j], numconst));
        }

        long kcut = kap / d;
        std::vector<Real> axis_full(d, one), axis_tail(d, one);
        for (long i = 0; i < d && out.certified; ++i) {
            Real x = bounds::pow_up(env_.rho_hi, axes_[i].x_exponent);
            if (!(x < 1)) {
                out.certified = false;
                break;
            }
            Real theta = (one + x) / 2;
            // k* with (|s|+k)x/(k+1) <= theta for all k >= k*.
            double xs = x.to_double(), th = theta.to_double(), as = axes_[i].abs_s.to_double();
            long kstar = 0;
            if (as > 1.0) kstar = static_cast<long>(std::ceil((th - as * xs) / (xs - th))) + 1;
            if (kstar < 0) kstar = 0;
            if (kstar > kap || kcut < 1) {
                out.certified = false;
                break;
            }
            // verify the ratio bound at kstar with outward rounding
            Real mu = bounds::div_up(bounds::mul_up(axes_[i].abs_s + Real::of(kstar, wp_), x),
                                     Real::of(kstar + 1, wp_));
            if (!(mu <= theta)) {
                out.certified = false;
                break;
            }
            // The ladder accumulates ~k ulps of relative error; the slack
            // scales with the cutoff so the bound stays outward.
            Real ladder_slack = one + ldexp(Real::of(kap + 16, wp_), -(wp_ - 4));
            auto term_at = [&](long k) {
                return bounds::mul_up(bounds::mul_up(abs(binom[i][k]), ladder_slack),
                                      bounds::pow_up(x, k));
            };
            Real geo = bounds::div_up(theta, bounds::sub_down(one, theta));
            // full axis sum: computed prefix + geometric remainder
            Real full = Real::of(0L, wp_);
            for (long k = 0; k <= kstar; ++k) full = bounds::add_up(full, term_at(k));
            axis_full[i] = bounds::add_up(full, bounds::mul_up(term_at(kstar), geo));
            // tail beyond kcut
            long m = std::max(kcut, kstar);
            Real t = bounds::mul_up(term_at(m), geo);
            for (long k = kcut + 1; k <= m; ++k) t = bounds::add_up(t, term_at(k));
            axis_tail[i] = t;
        }
        if (out.certified) {
            Real tail = Real::of(0L, wp_);
            for (long i = 0; i < d; ++i) {
                Real part = axis_tail[i];
                for (long t = 0; t < d; ++t)
                    if (t != i) part = bounds::mul_up(part, axis_full[t]);
                tail = bounds::add_up(tail, part);
            }
            out.tail = bounds::mul_up(cfac, tail);
            Real absall = cfac;
            for (long i = 0; i < d; ++i) absall = bounds::mul_up(absall, axis_full[i]);
            out.abs_bound = absall;
        }
        return out;
    }

private:
    const LucasParams& params_;
    std::vector<AxisSpec> axes_;
    std::vector<FactorSpec> facs_;
    long wp_;
    GrowthEnvelope env_;
};

EvalResult run_product_form(const LucasParams& params, std::vector<AxisSpec> axes,
                            std::vector<FactorSpec> facs, const TruncationPolicy& policy,
                            long prec) {
    long wp = prec + 64;
    // D^{s_d(1)/2} prefactor: single-valued power of the positive rational D.
    Complex s_total(wp);
    for (const auto& a : axes) s_total += a.s;
    Complex pref = real_pow(Real::of(params.d(), wp), s_total / Real::of(2L, wp));

    ProductFormEvaluator ev(params, std::move(axes), std::move(facs), wp);
    Real pref_mag = bounds::mul_up(abs(pref), Real::of(1L, wp) + ldexp(Real::of(1L, wp), -(wp - 8)));

    if (policy.forced_cutoff) {
        ConvResult r = ev.run(*policy.forced_cutoff);
        Complex value = pref * r.sum;
        Real tail = bounds::mul_up(pref_mag, r.tail);
        Real rounding = ldexp(bounds::add_up(abs(value), bounds::mul_up(pref_mag, r.abs_bound)) *
                                  Real::of(r.terms + 64, wp),
                              -(wp - 4));
        return {value, tail, rounding, r.terms};
    }

    Real eps = Real::of(policy.eps, wp);
    Real half_eps = eps / 2;
    long cutoff = std::max<long>(4, policy.initial_cutoff);
    std::optional<Complex> prev;
    while (true) {
        ConvResult r = ev.run(cutoff);
        Complex value = pref * r.sum;
        Real tail = bounds::mul_up(pref_mag, r.tail);
        bool delta_ok = false;
        if (prev) {
            Real delta = abs(value - *prev);
            delta_ok = delta <= half_eps;
        }
        if (r.certified && tail <= half_eps && delta_ok) {
            Real rounding =
                ldexp(bounds::add_up(abs(value), bounds::mul_up(pref_mag, r.abs_bound)) *
                          Real::of(r.terms + 64, wp),
                      -(wp - 4));
            return {value.round_to(prec), tail, rounding, r.terms};
        }
        if (cutoff >= policy.max_cutoff)
            fail(ErrorCode::AccuracyUnreachable,
                 "k-sum cutoff " + std::to_string(cutoff) + " exhausted (tail " +
                     tail.str(6) + ")");
        prev = value;
        cutoff = std::min(policy.max_cutoff,
                          cutoff * std::max<long>(2, policy.growth_factor));
    }
}

void guard_zeta_poles(const LucasParams& params, long q, const MultiPoint& s,
                      const TruncationPolicy& policy, long prec) {
    for (std::size_t j = 1; j <= s.depth(); ++j) {
        Complex z = s.suffix(j);
        Real dist = nearest_zeta_pole_distance(params, q, z, 1.0, prec);
        if (dist < Real::of(policy.pole_guard_radius, 64))
            fail(ErrorCode::PoleProximity,
                 "suffix s_d(" + std::to_string(j) + ") within pole guard (distance " +
                     dist.str(4) + ")");
    }
}

void guard_additive_poles(const LucasParams& params, const AdditiveTuple& chars,
                          const MultiPoint& s, const TruncationPolicy& policy, long prec) {
    for (std::size_t j = 1; j <= s.depth(); ++j) {
        Complex z = s.suffix(j);
        Complex g = chars.g_value(j, prec + 16);
        Real dist = nearest_additive_pole_distance(params, g, z, 1.0, prec);
        if (dist < Real::of(policy.pole_guard_radius, 64))
            fail(ErrorCode::PoleProximity,
                 "suffix s_d(" + std::to_string(j) + ") within pole guard (distance " +
                     dist.str(4) + ")");
    }
}

} // namespace

EvalResult shifted_zeta_cont(const LucasParams& params, const ShiftSpec& shift,
                             const MultiPoint& s, const TruncationPolicy& policy, long prec) {
    shift.validate();
    if (shift.depth() != s.depth()) fail(ErrorCode::BadInput, "shift depth != point depth");
    guard_zeta_poles(params, shift.q, s, policy, prec);

    long wp = prec + 64;
    const long d = static_cast<long>(s.depth());
    Real la = params.log_alpha(wp);
    std::vector<AxisSpec> axes;
    std::vector<FactorSpec> facs;
    for (long j = 0; j < d; ++j) {
        AxisSpec a;
        a.s = s.s[static_cast<std::size_t>(j)].round_to(wp);
        a.abs_s = abs(a.s);
        a.x_exponent = shift.cumulative(static_cast<std::size_t>(j) + 1);
        axes.push_back(std::move(a));

        FactorSpec f;
        Complex suf = s.suffix(static_cast<std::size_t>(j) + 1).round_to(wp);
        f.u = exp(Complex{-(suf.re * la), -(suf.im * la)});
        f.r = shift.r[static_cast<std::size_t>(j)];
        f.q = shift.q;
        f.sigma_suffix = suf.re;
        facs.push_back(std::move(f));
    }
    return run_product_form(params, std::move(axes), std::move(facs), policy,
                            prec);
}

EvalResult dirichlet_L_cont(const LucasParams& params,
                            const std::vector<DirichletCharacter>& chars, const MultiPoint& s,
                            const TruncationPolicy& policy, long prec) {
    if (chars.empty() || chars.size() != s.depth())
        fail(ErrorCode::BadInput, "need one character per depth");
    long q = chars[0].modulus();
    for (const auto& chi : chars)
        if (chi.modulus() != q) fail(ErrorCode::MixedModuli, "characters must share one modulus");

    long wp = prec + 64;
    const std::size_t d = s.depth();
    long m = chars[0].value_order();

    // chi_1(r_1) chi_2(r_1+r_2) ... chi_d(r_1+...+r_d) summed over all
    // residue tuples; each weight is an exact root of unity (or zero).
    std::vector<long> r(d, 1);
    TruncationPolicy sub = policy;
    double tuples = std::pow(static_cast<double>(q), static_cast<double>(d));
    sub.eps = policy.eps / tuples;

    Complex total(wp);
    Real tail = Real::of(0L, wp);
    Real rounding = Real::of(0L, wp);
    long terms = 0;
    while (true) {
        long cum = 0;
        long expo = 0;
        bool zero = false;
        for (std::size_t t = 0; t < d; ++t) {
            cum += r[t];
            auto e = chars[t].value_exponent(cum);
            if (!e) {
                zero = true;
                break;
            }
            expo = (expo + *e) % m;
        }
        if (!zero) {
            Complex weight = Cyclotomic::monomial(Rational(1), expo, m).embed(wp);
            EvalResult part = shifted_zeta_cont(params, ShiftSpec(q, r), s, sub, prec);
            total += weight * part.value.round_to(wp);
            tail = bounds::add_up(tail, part.truncation_tail_bound);
            rounding = bounds::add_up(rounding, part.rounding_bound);
            // each part was rounded to `prec` before the combination
            rounding = bounds::add_up(rounding, ldexp(abs(part.value) + Real::of(1L, wp), -(prec - 2)));
            terms += part.terms_used;
        }
        std::size_t i = 0;
        for (; i < d; ++i) {
            if (++r[i] <= q) break;
            r[i] = 1;
        }
        if (i == d) break;
    }
    return {total.round_to(prec), tail, rounding, terms};
}

EvalResult additive_L_cont(const LucasParams& params, const AdditiveTuple& chars,
                           const MultiPoint& s, const TruncationPolicy& policy, long prec) {
    if (chars.depth() != s.depth()) fail(ErrorCode::BadInput, "tuple depth != point depth");
    chars.require_bounded();
    guard_additive_poles(params, chars, s, policy, prec);

    long wp = prec + 64;
    const long d = static_cast<long>(s.depth());
    Real la = params.log_alpha(wp);
    std::vector<AxisSpec> axes;
    std::vector<FactorSpec> facs;
    for (long j = 0; j < d; ++j) {
        AxisSpec a;
        a.s = s.s[static_cast<std::size_t>(j)].round_to(wp);
        a.abs_s = abs(a.s);
        a.x_exponent = j + 1; // prod_j rho^{K_j} = prod_i rho^{i k_i}
        axes.push_back(std::move(a));

        FactorSpec f;
        Complex suf = s.suffix(static_cast<std::size_t>(j) + 1).round_to(wp);
        f.u = exp(Complex{-(suf.re * la), -(suf.im * la)});
        f.g = chars.g_value(static_cast<std::size_t>(j) + 1, wp);
        f.sigma_suffix = suf.re;
        facs.push_back(std::move(f));
    }
    return run_product_form(params, std::move(axes), std::move(facs), policy,
                            prec);
}

} // namespace lucaszeta
