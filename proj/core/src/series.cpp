#include "lucaszeta/series.hpp"

#include "lucaszeta/errors.hpp"

#include <algorithm>
#include <cmath>

namespace lucaszeta {

MultiPoint MultiPoint::real(const std::vector<double>& re, long prec) {
    std::vector<Complex> s;
    s.reserve(re.size());
    for (double x : re) s.push_back(Complex{Real::of(x, prec), Real::of(0L, prec)});
    return MultiPoint(std::move(s));
}

Complex MultiPoint::suffix(std::size_t j) const {
    Complex acc(s.empty() ? 64 : s[0].prec());
    for (std::size_t i = j; i <= s.size(); ++i) acc += s[i - 1];
    return acc;
}

Real MultiPoint::suffix_re(std::size_t j) const { return suffix(j).re; }

long ShiftSpec::cumulative(std::size_t i) const {
    long acc = 0;
    for (std::size_t t = 0; t < i; ++t) acc += r[t];
    return acc;
}

void ShiftSpec::validate() const {
    if (q < 1) fail(ErrorCode::BadInput, "shift modulus q must be >= 1");
    if (r.empty()) fail(ErrorCode::BadInput, "shift residues must be nonempty");
    for (long ri : r)
        if (ri < 1) fail(ErrorCode::BadInput, "shift residues must be positive");
}

bool in_domain(const MultiPoint& s, double delta) {
    for (std::size_t j = 1; j <= s.depth(); ++j)
        if (s.suffix_re(j) < Real::of(delta, 64)) return false;
    return true;
}

namespace {

// One level of the nested sum: the level walks a cumulative integer index N
// (its summation variable advances N by at least `min_step`), weighs each
// stop by weight(N) * U_{stride*N + offset}^{-s}.
struct Level {
    Complex s;
    Real sigma;                   // Re(s)
    long stride = 1;
    long offset = 0;
    long min_step = 1;            // 0 for the shifted series, 1 otherwise
    // weight kinds
    std::vector<Complex> cyc;     // Dirichlet: chi(N mod q_char), size q_char
    std::optional<Complex> fgen;  // additive: f(1); weight f(1)^N
};

struct KernelResult {
    Complex value;
    Real tail;
    long terms;
    Real abs_sum_bound; // bound on the sum of absolute values (for rounding)
    bool certified;
};

class NestedKernel {
public:
    NestedKernel(const LucasSequenceCache& cache, std::vector<Level> levels, long wp)
        : cache_(cache), levels_(std::move(levels)), wp_(wp) {}

    // Evaluates with all levels truncated at cumulative index <= nmax.
    KernelResult run(long nmax) {
        const long d = static_cast<long>(levels_.size());
        const Real one = Real::of(1L, wp_);
        GrowthEnvelope env = cache_.params().envelope(wp_);

        // Per-level envelope |weight(N) * U^{-s}| <= c_l * b_l^N and the
        // suffix products y_l; everything rounded outward.
        std::vector<Real> c(d, one), b(d, one), y(d + 1, one), bigc(d + 1, one);
        for (long l = 0; l < d; ++l) {
            const Level& lv = levels_[l];
            Real t = -lv.sigma;
            c[l] = bounds::mul_up(bounds::rpow_up(env.env_lo, env.env_hi, t),
                                  bounds::rpow_up(env.alpha_lo, env.alpha_hi,
                                                  t * Real::of(lv.offset, wp_)));
            b[l] = bounds::rpow_up(env.alpha_lo, env.alpha_hi, t * Real::of(lv.stride, wp_));
            if (lv.fgen) {
                Real fa = bounds::add_up(bounds::mul_up(lv.fgen->re, lv.fgen->re),
                                         bounds::mul_up(lv.fgen->im, lv.fgen->im));
                b[l] = bounds::mul_up(b[l], bounds::sqrt_up(fa));
            }
        }
        bool certifiable = true;
        for (long l = d - 1; l >= 0; --l) {
            y[l] = bounds::mul_up(b[l], y[l + 1]);
            if (!(y[l] < 1)) certifiable = false;
            if (certifiable)
                bigc[l] = bounds::div_up(bounds::mul_up(c[l], bigc[l + 1]),
                                         bounds::sub_down(one, y[l]));
        }
        if (!certifiable)
            fail(ErrorCode::OutOfDomain,
                 "suffix real parts leave no certified geometric margin");

        // log U_n cache over every index any level can touch.
        long max_idx = 0;
        for (const Level& lv : levels_) max_idx = std::max(max_idx, lv.stride * nmax + lv.offset);
        ensure_logs(max_idx);

        const Real slack = one + ldexp(one, -(wp_ - 8));
        std::vector<Complex> h_next; // \hat H_{l+1} over N = 0..nmax+1
        std::vector<Real> f_next;
        long terms = 0;

        for (long l = d - 1; l >= 0; --l) {
            const Level& lv = levels_[l];
            std::vector<Complex> h(nmax + 2, Complex(wp_));
            std::vector<Real> f(nmax + 2, Real::of(0L, wp_));
            Real tail_c = bounds::div_up(
                bounds::mul_up(bounds::mul_up(c[l], bigc[l + 1]), bounds::pow_up(y[l], nmax + 1)),
                bounds::sub_down(one, y[l]));
            f[nmax + 1] = tail_c;

            // weight(N) precomputation for the additive case (forward power).
            Complex fpow = Complex::of(1, wp_);
            std::vector<Complex> fpows;
            if (lv.fgen) {
                fpows.reserve(nmax + 1);
                for (long n = 0; n <= nmax; ++n) {
                    fpows.push_back(fpow);
                    fpow *= *lv.fgen;
                }
            }

            long next_shift = (l == d - 1) ? 0 : levels_[l + 1].min_step;
            for (long n = nmax; n >= 0; --n) {
                Complex w(wp_);
                bool zero_weight = false;
                if (!lv.cyc.empty()) {
                    const Complex& cw = lv.cyc[static_cast<std::size_t>(n % static_cast<long>(lv.cyc.size()))];
                    if (cw.is_zero()) zero_weight = true;
                    w = cw;
                } else if (lv.fgen) {
                    w = fpows[static_cast<std::size_t>(n)];
                } else {
                    w = Complex::of(1, wp_);
                }

                Complex g_next = (l == d - 1)
                                     ? Complex::of(1, wp_)
                                     : h_next[static_cast<std::size_t>(n + next_shift)];
                Real e_next = (l == d - 1) ? Real::of(0L, wp_)
                                           : f_next[static_cast<std::size_t>(n + next_shift)];

                long idx = lv.stride * n + lv.offset;
                // idx = 0 can only appear at lattice points no consumer ever
                // reaches (the strictly-increasing variants start at n = 1).
                if (zero_weight || idx < 1) {
                    h[n] = h[n + 1];
                    f[n] = f[n + 1];
                    continue;
                }
                // U^{-s} = exp(-s log U), single-valued for U > 0.
                const Real& lu = log_u_[static_cast<std::size_t>(idx)];
                Real mag = exp(-(lv.s.re * lu));
                Real ang = -(lv.s.im * lu);
                Real sn(wp_), cs(wp_);
                sin_cos(sn, cs, ang);
                Complex term{mag * cs, mag * sn};
                term = w * term;
                ++terms;

                h[n] = term * g_next + h[n + 1];
                Real abs_term = bounds::mul_up(abs(term), slack);
                f[n] = bounds::add_up(bounds::mul_up(abs_term, e_next), f[n + 1]);
            }
            h_next = std::move(h);
            f_next = std::move(f);
        }

        long start = levels_[0].min_step;
        KernelResult out{h_next[static_cast<std::size_t>(start)],
                         f_next[static_cast<std::size_t>(start)], terms, bigc[0], true};
        return out;
    }

    // Initial cutoff guess from the envelope decay rates.
    long suggest_cutoff(double eps) {
        const long d = static_cast<long>(levels_.size());
        GrowthEnvelope env = cache_.params().envelope(wp_);
        double log_alpha = std::log(env.alpha_lo.to_double());
        double worst = 1e300;
        double suffix_sigma = 0;
        for (long l = d - 1; l >= 0; --l) {
            suffix_sigma += levels_[l].sigma.to_double();
            double rate = suffix_sigma * levels_[l].stride * log_alpha;
            if (levels_[l].fgen) {
                // |g| <= 1 only improves the rate; ignore for sizing.
            }
            worst = std::min(worst, rate);
        }
        if (!(worst > 0)) return 64;
        double n = (std::log(1.0 / std::max(eps, 1e-300)) + 40.0) / worst;
        return std::max<long>(32, static_cast<long>(n) + 8);
    }

private:
    void ensure_logs(long max_idx) {
        for (long i = static_cast<long>(log_u_.size()); i <= max_idx; ++i) {
            if (i == 0)
                log_u_.push_back(Real::nan(wp_));
            else
                log_u_.push_back(cache_.log_u(static_cast<std::size_t>(i), wp_));
        }
    }

    const LucasSequenceCache& cache_;
    std::vector<Level> levels_;
    long wp_;
    std::vector<Real> log_u_;
};

EvalResult run_adaptive(const LucasSequenceCache& cache, std::vector<Level> levels,
                        const OracleOptions& opt) {
    long wp = opt.prec + 64;
    NestedKernel kernel(cache, std::move(levels), wp);

    if (opt.forced_cutoff) {
        KernelResult r = kernel.run(*opt.forced_cutoff);
        Real rounding =
            ldexp(bounds::add_up(abs(r.value), r.abs_sum_bound) * Real::of(r.terms + 16, wp),
                  -(wp - 4));
        return {r.value, r.tail, rounding, r.terms};
    }

    long nmax = kernel.suggest_cutoff(opt.eps);
    Real eps = Real::of(opt.eps, wp);
    while (true) {
        KernelResult r = kernel.run(nmax);
        if (r.tail <= eps) {
            Real rounding =
                ldexp(bounds::add_up(abs(r.value), r.abs_sum_bound) * Real::of(r.terms + 16, wp),
                      -(wp - 4));
            return {r.value.round_to(opt.prec), r.tail, rounding, r.terms};
        }
        if (nmax >= opt.max_cutoff)
            fail(ErrorCode::AccuracyUnreachable,
                 "certified tail still " + r.tail.str(6) + " at cutoff " + std::to_string(nmax));
        nmax = std::min(opt.max_cutoff, nmax * 2);
    }
}

void require_interior(const MultiPoint& s) {
    for (std::size_t j = 1; j <= s.depth(); ++j)
        if (!(s.suffix_re(j) > 0))
            fail(ErrorCode::OutOfDomain,
                 "suffix sum Re(s_" + std::to_string(j) + " + ... + s_d) must be positive");
}

} // namespace

EvalResult direct_multiple_zeta(const LucasSequenceCache& cache, const MultiPoint& s,
                                const OracleOptions& opt) {
    if (s.depth() == 0) fail(ErrorCode::BadInput, "depth must be >= 1");
    require_interior(s);
    long wp = opt.prec + 64;
    std::vector<Level> levels;
    for (std::size_t i = 0; i < s.depth(); ++i) {
        Level lv;
        lv.s = s.s[i].round_to(wp);
        lv.sigma = lv.s.re;
        lv.stride = 1;
        lv.offset = 0;
        lv.min_step = 1;
        levels.push_back(std::move(lv));
    }
    return run_adaptive(cache, std::move(levels), opt);
}

EvalResult direct_shifted_zeta(const LucasSequenceCache& cache, const ShiftSpec& shift,
                               const MultiPoint& s, const OracleOptions& opt) {
    shift.validate();
    if (shift.depth() != s.depth()) fail(ErrorCode::BadInput, "shift depth != point depth");
    require_interior(s);
    long wp = opt.prec + 64;
    std::vector<Level> levels;
    for (std::size_t i = 0; i < s.depth(); ++i) {
        Level lv;
        lv.s = s.s[i].round_to(wp);
        lv.sigma = lv.s.re;
        lv.stride = shift.q;
        lv.offset = shift.cumulative(i + 1);
        lv.min_step = 0;
        levels.push_back(std::move(lv));
    }
    return run_adaptive(cache, std::move(levels), opt);
}

EvalResult direct_dirichlet_L(const LucasSequenceCache& cache,
                              const std::vector<DirichletCharacter>& chars, const MultiPoint& s,
                              const OracleOptions& opt) {
    if (chars.empty() || chars.size() != s.depth())
        fail(ErrorCode::BadInput, "need one character per depth");
    long q = chars[0].modulus();
    for (const auto& chi : chars)
        if (chi.modulus() != q) fail(ErrorCode::MixedModuli, "characters must share one modulus");
    require_interior(s);
    long wp = opt.prec + 64;
    std::vector<Level> levels;
    for (std::size_t i = 0; i < s.depth(); ++i) {
        Level lv;
        lv.s = s.s[i].round_to(wp);
        lv.sigma = lv.s.re;
        lv.stride = 1;
        lv.offset = 0;
        lv.min_step = 1;
        lv.cyc.reserve(q);
        for (long x = 0; x < q; ++x) lv.cyc.push_back(chars[i](x).embed(wp));
        levels.push_back(std::move(lv));
    }
    return run_adaptive(cache, std::move(levels), opt);
}

EvalResult direct_additive_L(const LucasSequenceCache& cache, const AdditiveTuple& chars,
                             const MultiPoint& s, const OracleOptions& opt) {
    if (chars.depth() != s.depth()) fail(ErrorCode::BadInput, "tuple depth != point depth");
    chars.require_bounded();
    require_interior(s);
    long wp = opt.prec + 64;
    std::vector<Level> levels;
    for (std::size_t i = 0; i < s.depth(); ++i) {
        Level lv;
        lv.s = s.s[i].round_to(wp);
        lv.sigma = lv.s.re;
        lv.stride = 1;
        lv.offset = 0;
        lv.min_step = 1;
        lv.fgen = chars.f(i + 1).value(wp);
        levels.push_back(std::move(lv));
    }
    return run_adaptive(cache, std::move(levels), opt);
}

} // namespace lucaszeta
